#include "qsa/correlations.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsa::correlations {

double concurrence(const Matrix4& rho) {
  const Matrix4 yy = ops::kron(ops::pauli_y(), ops::pauli_y());
  const Matrix4 m = rho * yy * rho.conjugate() * yy;

  Eigen::ComplexEigenSolver<Matrix4> es(m, /*computeEigenvectors=*/false);
  std::array<double, 4> r{};
  for (int i = 0; i < 4; ++i)
    r[i] = std::sqrt(std::max(0.0, es.eigenvalues()[i].real()));
  std::sort(r.begin(), r.end(), std::greater<>());
  return std::max(0.0, r[0] - r[1] - r[2] - r[3]);
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double eof(const Matrix4& rho) {
  const double c = concurrence(rho);
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

double mutual_information(const Matrix4& rho) {
  const double mi =
      ops::von_neumann_entropy(ops::partial_trace(rho, ops::Subsystem::System)) +
      ops::von_neumann_entropy(ops::partial_trace(rho, ops::Subsystem::Ancilla)) -
      ops::von_neumann_entropy(rho);
  if (mi < -1e-10)
    throw std::runtime_error("mutual_information: negative beyond tolerance");
  return std::max(mi, 0.0);
}

double effective_beta(const Matrix2& rho, double omega) {
  if (omega == 0.0)
    throw std::invalid_argument("effective_beta: omega must be nonzero");
  if (std::abs(rho(0, 1)) > 1e-8 || std::abs(rho(1, 0)) > 1e-8)
    throw std::invalid_argument(
        "effective_beta: undefined for coherent (non-diagonal) states");
  const double p0 = rho(0, 0).real();
  const double p1 = rho(1, 1).real();
  if (p1 < 1e-15) return kInfinity;
  if (p0 < 1e-15) return -kInfinity;
  return std::log(p0 / p1) / (2.0 * omega);
}

CorrelationRecord correlation_record(const Matrix4& rho, double omega_s,
                                     double omega_a) {
  CorrelationRecord rec;
  rec.concurrence = concurrence(rho);
  rec.eof = eof(rho);
  rec.mutual_info = mutual_information(rho);
  const auto try_beta = [](const Matrix2& r, double w) -> std::optional<double> {
    try {
      return effective_beta(r, w);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  };
  rec.beta_eff_s = try_beta(ops::partial_trace(rho, ops::Subsystem::System), omega_s);
  rec.beta_eff_a = try_beta(ops::partial_trace(rho, ops::Subsystem::Ancilla), omega_a);
  return rec;
}

}  // namespace qsa::correlations
