#include "qsa/ops.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qsa::ops {

namespace {
const Complex kI{0.0, 1.0};
}

// --------------------------- qubit operators --------------------------------

Matrix2 identity2() { return Matrix2::Identity(); }

Matrix2 pauli_x() {
  Matrix2 m;
  m << 0, 1,
       1, 0;
  return m;
}

Matrix2 pauli_y() {
  Matrix2 m;
  m << 0, kI,
       -kI, 0;
  return m;
}

Matrix2 pauli_z() {
  Matrix2 m;
  m << -1, 0,
        0, 1;
  return m;
}

Matrix2 raising() {
  Matrix2 m = Matrix2::Zero();
  m(1, 0) = 1.0;
  return m;
}

Matrix2 lowering() {
  Matrix2 m = Matrix2::Zero();
  m(0, 1) = 1.0;
  return m;
}

Matrix2 pauli(const std::string& name) {
  if (name == "x") return pauli_x();
  if (name == "y") return pauli_y();
  if (name == "z") return pauli_z();
  if (name == "identity") return identity2();
  throw std::invalid_argument("pauli: unknown operator name '" + name + "'");
}

Vector2 ket_ground() { return Vector2(1.0, 0.0); }
Vector2 ket_excited() { return Vector2(0.0, 1.0); }
Vector2 ket_plus() { return Vector2(1.0, 1.0) / std::numbers::sqrt2_v<double>; }
Vector2 ket_minus() { return Vector2(1.0, -1.0) / std::numbers::sqrt2_v<double>; }

// --------------------------- tensor structure -------------------------------

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

Matrix2 partial_trace(const Matrix4& rho, Subsystem keep) {
  Matrix2 out = Matrix2::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        if (keep == Subsystem::System)
          out(i, j) += rho(2 * i + k, 2 * j + k);
        else
          out(i, j) += rho(2 * k + i, 2 * k + j);
      }
  return out;
}

Vector vec(const Matrix& a) {
  return Eigen::Map<const Vector>(a.data(), a.size());
}

Matrix unvec(const Vector& v, Eigen::Index dim) {
  if (v.size() != dim * dim)
    throw std::invalid_argument("unvec: size mismatch");
  return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

// --------------------------- Hermitian utilities ----------------------------

bool is_hermitian(const Matrix& a, double tol) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

StateCheck check_state(const Matrix& rho) {
  StateCheck c;
  c.hermiticity_defect = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  c.trace_defect = std::abs(rho.trace() - Complex(1.0));
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(rho));
  c.min_eigenvalue = es.eigenvalues().minCoeff();
  return c;
}

// --------------------------- matrix functions -------------------------------

Matrix matrix_log(const Matrix& rho) {
  if (!is_hermitian(rho, 1e-10))
    throw std::invalid_argument("matrix_log: input not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(rho));
  Eigen::VectorXd logs = es.eigenvalues().cwiseMax(kEpsLog).array().log();
  return es.eigenvectors() * logs.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix exp_hermitian_shifted(const Matrix& h, double scale) {
  if (!is_hermitian(h, 1e-10))
    throw std::invalid_argument("exp_hermitian_shifted: input not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(h));
  Eigen::VectorXd ev = scale * es.eigenvalues();
  ev.array() -= ev.maxCoeff();
  Eigen::VectorXd exps = ev.array().exp();
  return es.eigenvectors() * exps.asDiagonal() * es.eigenvectors().adjoint();
}

double trace_norm(const Matrix& a) {
  if (!is_hermitian(a, 1e-10))
    throw std::invalid_argument("trace_norm: input not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(a));
  return es.eigenvalues().cwiseAbs().sum();
}

// --------------------------- entropies --------------------------------------

double von_neumann_entropy(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(rho));
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = std::max(es.eigenvalues()[i], kEpsLog);
    s -= p * std::log(p);
  }
  return s;
}

double relative_entropy(const Matrix& rho, const Matrix& w) {
  if (rho.rows() != w.rows())
    throw std::invalid_argument("relative_entropy: dimension mismatch");

  Eigen::SelfAdjointEigenSolver<Matrix> ew(hermitize(w));
  // weight of rho on the numerical null space of w
  constexpr double support_tol = 1e-12;
  double null_weight = 0.0;
  for (Eigen::Index i = 0; i < ew.eigenvalues().size(); ++i) {
    if (ew.eigenvalues()[i] <= support_tol) {
      const Vector v = ew.eigenvectors().col(i);
      null_weight += std::real((v.adjoint() * rho * v)(0, 0));
    }
  }
  if (null_weight > 1e-10) return kInfinity;

  const Matrix log_rho = matrix_log(rho);
  const Matrix log_w = matrix_log(w);
  return std::real((rho * (log_rho - log_w)).trace());
}

}  // namespace qsa::ops
