#include "qsa/model.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <stdexcept>

namespace qsa::model {

using ops::kron;

namespace {
const Complex kI{0.0, 1.0};

Eigen::Matrix<Complex, 16, 16> kron44(const Matrix4& a, const Matrix4& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}
}  // namespace

void ModelParams::validate() const {
  const double fields[] = {omega_s, omega_a, jx, jy, jz, gamma, big_gamma};
  for (double f : fields)
    if (!std::isfinite(f))
      throw std::invalid_argument("ModelParams: non-finite parameter");
  if (gamma <= 0.0 || big_gamma <= 0.0)
    throw std::invalid_argument("ModelParams: gamma and big_gamma must be > 0");
}

Matrix4 hamiltonian_total(const ModelParams& p) {
  const Matrix2 id = ops::identity2();
  return p.omega_s * kron(ops::pauli_z(), id) +
         p.omega_a * kron(id, ops::pauli_z()) +
         p.jx * kron(ops::pauli_x(), ops::pauli_x()) +
         p.jy * kron(ops::pauli_y(), ops::pauli_y()) +
         p.jz * kron(ops::pauli_z(), ops::pauli_z());
}

Matrix4 apply_lindbladian(const ModelParams& p, const Matrix4& rho) {
  const Matrix4 h = hamiltonian_total(p);
  Matrix4 out = -kI * (h * rho - rho * h);

  const Matrix2 id = ops::identity2();
  const Matrix4 jd = kron(ops::lowering(), id);   // gamma channel, de-excites S
  const Matrix4 ju = kron(ops::raising(), id);    // big_gamma channel
  const Matrix4 nd = ju * jd;                     // sigma_+ sigma_- (x) 1
  const Matrix4 nu = jd * ju;                     // sigma_- sigma_+ (x) 1

  out += p.gamma * (jd * rho * ju - 0.5 * (nd * rho + rho * nd));
  out += p.big_gamma * (ju * rho * jd - 0.5 * (nu * rho + rho * nu));
  return out;
}

Superoperator liouvillian_matrix(const ModelParams& p) {
  const Matrix4 h = hamiltonian_total(p);
  const Matrix4 id4 = Matrix4::Identity();

  // column stacking: vec(A rho B) = (B^T kron A) vec(rho)
  Superoperator l = -kI * (kron44(id4, h) - kron44(h.transpose(), id4));

  const Matrix2 id = ops::identity2();
  const struct { double rate; Matrix4 j; } channels[] = {
      {p.gamma, kron(ops::lowering(), id)},
      {p.big_gamma, kron(ops::raising(), id)},
  };
  for (const auto& ch : channels) {
    const Matrix4 jdj = ch.j.adjoint() * ch.j;
    l += ch.rate * (kron44(ch.j.conjugate(), ch.j) -
                    0.5 * (kron44(id4, jdj) + kron44(jdj.transpose(), id4)));
  }
  return l;
}

double bath_beta(const ModelParams& p) {
  if (p.omega_s == 0.0)
    throw std::invalid_argument("bath_beta: undefined for omega_s = 0");
  return std::log(p.gamma / p.big_gamma) / (2.0 * p.omega_s);
}

Matrix gibbs_state(const Matrix& h, double beta) {
  const Matrix num = ops::exp_hermitian_shifted(h, -beta);
  return num / num.trace().real();
}

double trace_preservation_defect(const Superoperator& l) {
  const Vector trace_functional = ops::vec(Matrix4::Identity());
  return (trace_functional.adjoint() * l).cwiseAbs().maxCoeff();
}

}  // namespace qsa::model
