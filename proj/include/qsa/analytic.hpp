// analytic.hpp — Closed-form solution machinery for the exchange-symmetric
// configuration jx = jy = J/8, jz = 0, omega_s = omega_a = omega: element-wise
// generator equations, the lambda functions, the reduced dynamical map for
// rho_A(0) = 1/2, and the time-local (TCL) generator built from it. Used as
// an independent oracle against the general integrator.
//
// The element equations are written in the excited-first index convention
// (index value 0 labels the excited basis vector); elem(i,j,k,l) below maps
// that onto the global ground-first basis order.

#pragma once

#include "qsa/model.hpp"

#include <array>

namespace qsa::analytic {

struct RestrictedParams {
  double omega = 1.0;
  double gamma = 1.0;
  double big_gamma = 0.1;
  double j = 8.0;  // J = 8 * jx

  // Validates jx == jy, jz == 0, omega_s == omega_a (tolerance 1e-12).
  static RestrictedParams from(const model::ModelParams& p);
  model::ModelParams to_model_params() const;

  double eta() const { return gamma + big_gamma; }
  double delta() const { return eta() * eta() - j * j; }
};

struct AnalyticCoefficients {
  double eta = 0.0;
  double delta = 0.0;
  double omega_plus = 0.0, omega_minus = 0.0;  // eta^2 - J^2/2 +/- eta sqrt(delta)
  double sigma_plus = 0.0, sigma_minus = 0.0;  // eta +/- sqrt(delta)
  std::array<double, 5> lambda{};
  std::array<double, 5> lambda_dot{};
  std::array<double, 4> gamma_s{};  // auxiliary rate combinations
  double d_denom = 0.0;             // 4 lambda1 (lambda4 - lambda3)
  bool d_singular = false;          // |d_denom| < 1e-12
  double lambda1_scale = 0.0;       // pre-cancellation magnitude of lambda1
};

// lambda_1..lambda_5 and their time derivatives, evaluated with complex
// arithmetic (principal square root) and returned as real parts. When
// eta > J the imaginary residue is asserted <= 1e-9. |delta| < 1e-12 is
// refused ("degenerate delta").
AnalyticCoefficients lambda_functions(double t, const RestrictedParams& p);

// lambda_functions plus the four auxiliary rate combinations and their common
// denominator. d_singular flags |d_denom| < 1e-12; not fatal.
AnalyticCoefficients tcl_rates(double t, const RestrictedParams& p);

// Components of the reduced dynamical map for rho_A(0) = 1/2:
//   rho_01(t)  = e^{2 i omega t} lambda1(t) rho_01(0)
//   v_z(t)     = chi(t) v_z(0) + k(t),    v_z = Tr[sigma_z rho]
// with chi = (lambda3 - lambda4)/2 + g, k = lambda5 + lambda3 - lambda4 + g,
// g = (delta lambda2 - eta (big_gamma - gamma)) / (2 gamma eta).
struct ReducedMap {
  double lambda1 = 0.0, lambda1_dot = 0.0;
  double chi = 0.0, chi_dot = 0.0;
  double k = 0.0, k_dot = 0.0;
  // pre-cancellation scales; a map component is treated as singular when it
  // is small relative to its own scale, not in absolute terms
  double lambda1_scale = 0.0, chi_scale = 0.0;
};
ReducedMap reduced_map(double t, const RestrictedParams& p);

// Closed-form reduced state at time t for the product initial condition
// rho_s0 (x) 1/2.
Matrix2 analytic_reduced_state(double t, const RestrictedParams& p,
                               const Matrix2& rho_s0);

// Time-local generator applied to a state: commutator with omega sigma_z
// plus dephasing, decay and excitation channels with rates derived from the
// reduced map (the oscillating sigma_z--sigma_+/- cross channel carries a
// coefficient that vanishes identically for rho_A(0) = 1/2). Valid only
// along evolutions started from rho_A(0) = 1/2. Throws std::domain_error
// where the map degenerates (lambda1 or chi at a zero).
Matrix2 tcl_apply(const Matrix2& rho_s, double t, const RestrictedParams& p);

// Element-wise right-hand side of the generator under the restriction;
// equals apply_lindbladian on the same state. The nine independent elements
// are evaluated from their closed equations, the rest follow from
// Hermiticity and unit trace.
Matrix4 element_rhs(const RestrictedParams& p, const Matrix4& rho);

// The two reduced-system element equations (coupled to joint elements);
// equals Tr_A of apply_lindbladian.
Matrix2 reduced_element_rhs(const RestrictedParams& p, const Matrix4& rho);

}  // namespace qsa::analytic
