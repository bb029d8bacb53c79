#include "qsa/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qsa::analytic {

namespace {
const Complex kI{0.0, 1.0};

struct LambdaEval {
  std::array<Complex, 5> lambda;
  std::array<Complex, 5> lambda_dot;
  // magnitude of the summed lambda_1 terms before cancellation; a zero
  // crossing of lambda_1 is detected relative to this scale
  double lambda1_scale = 0.0;
};

// Closed forms evaluated with complex arithmetic throughout; the principal
// square root handles delta < 0 (oscillatory regime) without separate branch
// code. Derivatives are written term by term from the closed forms, never by
// finite differences.
LambdaEval eval_lambdas(double t, double g, double G, double J) {
  const double eta = g + G;
  const Complex delta{eta * eta - J * J, 0.0};
  const Complex rtD = std::sqrt(delta);
  const Complex d32 = rtD * rtD * rtD;  // principal delta^{3/2}
  const Complex sig_p = eta + rtD, sig_m = eta - rtD;
  const Complex eh = std::exp(-0.5 * eta * t);        // e^{-eta t/2}
  const Complex es = std::exp(-0.5 * (eta + rtD) * t);  // e^{-(eta+sqrtD) t/2}
  const Complex ed = std::exp(rtD * t);               // e^{sqrtD t}
  const Complex ed2 = std::exp(0.5 * rtD * t);        // e^{sqrtD t/2}

  LambdaEval out;

  // lambda_1. The sinh/cosh form hides an exact cancellation: with the
  // principal branches, sqrt(omega_pm) = sigma_pm/sqrt(2) (both have positive
  // real part and square to omega_pm), so the sinh and cosh pieces combine to
  //   lambda_1 = e^{-eta t/2} (sigma_+ e^{-sigma_- t/4}
  //              - sigma_- e^{-sigma_+ t/4}) / (2 sqrt(delta)),
  // which is the form evaluated here. The two-piece form loses all digits
  // beyond t ~ 10/eta; this one does not.
  {
    const Complex u_slow = sig_p * std::exp(-0.25 * sig_m * t);
    const Complex u_fast = sig_m * std::exp(-0.25 * sig_p * t);
    out.lambda[0] = eh * (u_slow - u_fast) / (2.0 * rtD);
    out.lambda1_scale =
        std::abs(eh) * (std::abs(u_slow) + std::abs(u_fast)) / std::abs(2.0 * rtD);
    const Complex r_slow = -0.5 * eta - 0.25 * sig_m;
    const Complex r_fast = -0.5 * eta - 0.25 * sig_p;
    out.lambda_dot[0] = eh * (u_slow * r_slow - u_fast * r_fast) / (2.0 * rtD);
  }

  // lambda_2
  {
    const Complex paren = sig_p - sig_m * ed;
    out.lambda[1] = (rtD * eta * (G - g) + g * eta * es * paren) / d32;
    out.lambda_dot[1] =
        g * eta * (-0.5 * (eta + rtD) * es * paren - es * sig_m * rtD * ed) / d32;
  }

  // lambda_3
  {
    const Complex inner = eta * std::sinh(0.5 * rtD * t) - rtD;
    out.lambda[2] = J * J * (rtD * (g - G) + 2.0 * g * eh * inner) / (d32 * eta);
    const Complex innerd = eta * 0.5 * rtD * std::cosh(0.5 * rtD * t);
    out.lambda_dot[2] =
        J * J * 2.0 * g * (-0.5 * eta * eh * inner + eh * innerd) / (d32 * eta);
  }

  // lambda_4
  {
    const Complex q = ed2 - 1.0;
    out.lambda[3] = (J * J / eta) *
                    ((g - G) / (2.0 * delta) * q * q * es - out.lambda[1] / eta);
    const Complex qq_dot =
        2.0 * q * 0.5 * rtD * ed2 * es - 0.5 * (eta + rtD) * q * q * es;
    out.lambda_dot[3] = (J * J / eta) * ((g - G) / (2.0 * delta) * qq_dot -
                                         out.lambda_dot[1] / eta);
  }

  // lambda_5
  {
    const Complex first =
        eh * (2.0 * J * J * G + delta * (G - g) * std::exp(0.5 * eta * t)) /
        (delta * eta);
    const Complex paren = rtD * (1.0 - ed) + eta * (1.0 + ed);
    out.lambda[4] = first - es * G * paren / delta;
    const Complex first_dot = -0.5 * eta * eh * 2.0 * J * J * G / (delta * eta);
    const Complex paren_dot = -rtD * rtD * ed + eta * rtD * ed;
    out.lambda_dot[4] =
        first_dot -
        G * (-0.5 * (eta + rtD) * es * paren + es * paren_dot) / delta;
  }

  return out;
}
}  // namespace

RestrictedParams RestrictedParams::from(const model::ModelParams& p) {
  p.validate();
  if (std::abs(p.jx - p.jy) > 1e-12 || std::abs(p.jz) > 1e-12 ||
      std::abs(p.omega_s - p.omega_a) > 1e-12)
    throw std::invalid_argument(
        "RestrictedParams: requires jx == jy, jz == 0, omega_s == omega_a");
  return {p.omega_s, p.gamma, p.big_gamma, 8.0 * p.jx};
}

model::ModelParams RestrictedParams::to_model_params() const {
  return {omega, omega, j / 8.0, j / 8.0, 0.0, gamma, big_gamma};
}

AnalyticCoefficients lambda_functions(double t, const RestrictedParams& p) {
  if (std::abs(p.delta()) < 1e-12)
    throw std::domain_error(
        "lambda_functions: degenerate delta (eta == J), refusing");

  AnalyticCoefficients c;
  c.eta = p.eta();
  c.delta = p.delta();
  const double rt = std::sqrt(std::abs(c.delta));
  if (c.delta > 0.0) {
    c.sigma_plus = c.eta + rt;
    c.sigma_minus = c.eta - rt;
    c.omega_plus = c.eta * c.eta - 0.5 * p.j * p.j + c.eta * rt;
    c.omega_minus = c.eta * c.eta - 0.5 * p.j * p.j - c.eta * rt;
  } else {
    c.sigma_plus = c.sigma_minus = c.eta;
    c.omega_plus = c.omega_minus = c.eta * c.eta - 0.5 * p.j * p.j;
  }

  const LambdaEval ev = eval_lambdas(t, p.gamma, p.big_gamma, p.j);
  const bool real_regime = c.eta > p.j;
  for (int i = 0; i < 5; ++i) {
    if (real_regime && (std::abs(ev.lambda[i].imag()) > 1e-9 ||
                        std::abs(ev.lambda_dot[i].imag()) > 1e-9))
      throw std::runtime_error(
          "lambda_functions: imaginary residue beyond tolerance for eta > J");
    c.lambda[i] = ev.lambda[i].real();
    c.lambda_dot[i] = ev.lambda_dot[i].real();
  }
  c.lambda1_scale = ev.lambda1_scale;
  return c;
}

AnalyticCoefficients tcl_rates(double t, const RestrictedParams& p) {
  AnalyticCoefficients c = lambda_functions(t, p);
  const auto& l = c.lambda;
  const auto& ld = c.lambda_dot;
  static const double rt2 = std::numbers::sqrt2_v<double>;

  c.gamma_s[0] = 4.0 * ld[0] * (l[2] - l[3]) - 2.0 * l[0] * (ld[2] - ld[3]);
  c.gamma_s[1] = -2.0 * l[0] * (l[3] * (ld[1] + ld[2]) +
                                (l[1] - 1.0) * (ld[2] - ld[3]) -
                                l[2] * (ld[1] + ld[3]));
  c.gamma_s[2] = 4.0 * l[0] * (ld[2] - ld[3]) - c.gamma_s[1];
  c.gamma_s[3] = rt2 * (l[4] - l[1]) * (ld[2] - ld[3]) -
                 rt2 * l[3] * (ld[1] + ld[2] - ld[4]) +
                 rt2 * l[2] * (ld[1] + ld[3] - ld[4]);
  c.d_denom = 4.0 * l[0] * (l[3] - l[2]);
  c.d_singular = std::abs(c.d_denom) < 1e-12;
  return c;
}

ReducedMap reduced_map(double t, const RestrictedParams& p) {
  const AnalyticCoefficients c = lambda_functions(t, p);
  const double eta = p.eta(), delta = p.delta();
  const double g = (delta * c.lambda[1] - eta * (p.big_gamma - p.gamma)) /
                   (2.0 * p.gamma * eta);
  const double g_dot = delta * c.lambda_dot[1] / (2.0 * p.gamma * eta);

  ReducedMap m;
  m.lambda1 = c.lambda[0];
  m.lambda1_dot = c.lambda_dot[0];
  m.chi = 0.5 * (c.lambda[2] - c.lambda[3]) + g;
  m.chi_dot = 0.5 * (c.lambda_dot[2] - c.lambda_dot[3]) + g_dot;
  m.k = c.lambda[4] + c.lambda[2] - c.lambda[3] + g;
  m.k_dot = c.lambda_dot[4] + c.lambda_dot[2] - c.lambda_dot[3] + g_dot;
  m.lambda1_scale = c.lambda1_scale;
  m.chi_scale =
      0.5 * (std::abs(c.lambda[2]) + std::abs(c.lambda[3])) + std::abs(g);
  return m;
}

Matrix2 analytic_reduced_state(double t, const RestrictedParams& p,
                               const Matrix2& rho_s0) {
  const ReducedMap m = reduced_map(t, p);
  const double vz0 = std::real((ops::pauli_z() * rho_s0).trace());
  const double vz = m.chi * vz0 + m.k;
  const Complex c01 =
      std::exp(2.0 * kI * p.omega * t) * m.lambda1 * rho_s0(0, 1);

  Matrix2 out;
  out << 0.5 * (1.0 - vz), c01,
         std::conj(c01), 0.5 * (1.0 + vz);
  return out;
}

Matrix2 tcl_apply(const Matrix2& rho_s, double t, const RestrictedParams& p) {
  const ReducedMap m = reduced_map(t, p);
  if (std::abs(m.lambda1) < 1e-10 * m.lambda1_scale ||
      std::abs(m.chi) < 1e-10 * m.chi_scale)
    throw std::domain_error("tcl_apply: generator singular at t = " +
                            std::to_string(t));

  const double a_z = -m.lambda1_dot / (2.0 * m.lambda1) +
                     m.chi_dot / (4.0 * m.chi);
  const double s = -m.chi_dot / m.chi;
  const double d = m.k_dot - (m.chi_dot / m.chi) * m.k;
  const double a_down = 0.5 * (s - d);  // sigma_- channel
  const double a_up = 0.5 * (s + d);    // sigma_+ channel

  const Matrix2 sz = ops::pauli_z();
  const Matrix2 sm = ops::lowering();
  const Matrix2 sp = ops::raising();
  const Matrix2 h = p.omega * sz;
  const Matrix2 num = sp * sm;  // |1><1|
  const Matrix2 hole = sm * sp; // |0><0|

  Matrix2 out = -kI * (h * rho_s - rho_s * h);
  out += a_z * (sz * rho_s * sz - rho_s);
  out += a_down * (sm * rho_s * sp - 0.5 * (num * rho_s + rho_s * num));
  out += a_up * (sp * rho_s * sm - 0.5 * (hole * rho_s + rho_s * hole));
  return out;
}

Matrix4 element_rhs(const RestrictedParams& p, const Matrix4& rho) {
  const double g = p.gamma, G = p.big_gamma, J = p.j, w = p.omega;

  // excited-first element indices mapped onto the global ground-first order
  const auto e = [&rho](int i, int j, int k, int l) -> Complex {
    return rho(3 - 2 * i - j, 3 - 2 * k - l);
  };
  const Complex jq = kI * (J / 4.0);
  const Complex x0110 = e(0, 1, 1, 0);

  const Complex d0000 = -g * e(0, 0, 0, 0) + G * e(1, 0, 1, 0);
  const Complex d0001 = jq * e(0, 0, 1, 0) -
                        (2.0 * kI * w + g) * e(0, 0, 0, 1) + G * e(1, 0, 1, 1);
  const Complex d0010 =
      -(0.5 * (g + G) + 2.0 * kI * w) * e(0, 0, 1, 0) + jq * e(0, 0, 0, 1);
  const Complex d0011 = -0.5 * (g + G + 8.0 * kI * w) * e(0, 0, 1, 1);
  const Complex d0101 = -(g + G) * e(0, 1, 0, 1) +
                        G * (1.0 - e(0, 0, 0, 0) - e(1, 0, 1, 0)) -
                        jq * (std::conj(x0110) - x0110);
  const Complex d0110 =
      jq * (e(0, 1, 0, 1) - e(1, 0, 1, 0)) - 0.5 * (g + G) * x0110;
  const Complex d0111 = -(0.5 * (g + G) + 2.0 * kI * w) * e(0, 1, 1, 1) -
                        jq * e(1, 0, 1, 1);
  const Complex d1010 = g * e(0, 0, 0, 0) - G * e(1, 0, 1, 0) +
                        jq * (std::conj(x0110) - x0110);
  const Complex d1011 = -jq * e(0, 1, 1, 1) -
                        (2.0 * kI * w + G) * e(1, 0, 1, 1) + g * e(0, 0, 0, 1);
  const Complex d1111 = -(d0000 + d0101 + d1010);

  Matrix4 out = Matrix4::Zero();
  const auto put = [&out](int i, int j, int k, int l, Complex v) {
    out(3 - 2 * i - j, 3 - 2 * k - l) = v;
    out(3 - 2 * k - l, 3 - 2 * i - j) = std::conj(v);
  };
  put(0, 0, 0, 0, d0000);
  put(0, 0, 0, 1, d0001);
  put(0, 0, 1, 0, d0010);
  put(0, 0, 1, 1, d0011);
  put(0, 1, 0, 1, d0101);
  put(0, 1, 1, 0, d0110);
  put(0, 1, 1, 1, d0111);
  put(1, 0, 1, 0, d1010);
  put(1, 0, 1, 1, d1011);
  put(1, 1, 1, 1, d1111);
  return out;
}

Matrix2 reduced_element_rhs(const RestrictedParams& p, const Matrix4& rho) {
  const double g = p.gamma, G = p.big_gamma, J = p.j, w = p.omega;
  const auto e = [&rho](int i, int j, int k, int l) -> Complex {
    return rho(3 - 2 * i - j, 3 - 2 * k - l);
  };
  const Matrix2 rs = ops::partial_trace(rho, ops::Subsystem::System);
  const Complex x0110 = e(0, 1, 1, 0);

  // excited-first reduced elements: rs^{00} = rs(1,1), rs^{01} = rs(1,0)
  const Complex d00 =
      G - (g + G) * rs(1, 1) - kI * (J / 4.0) * (std::conj(x0110) - x0110);
  const Complex d01 = -0.5 * (g + G + 4.0 * kI * w) * rs(1, 0) +
                      kI * (J / 4.0) * (e(0, 0, 0, 1) - e(1, 0, 1, 1));

  Matrix2 out;
  out << -d00, std::conj(d01),
          d01, d00;
  return out;
}

}  // namespace qsa::analytic
