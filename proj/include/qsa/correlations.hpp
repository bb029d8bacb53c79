// correlations.hpp — Two-qubit correlation quantifiers: concurrence,
// entanglement of formation, mutual information, and the effective inverse
// temperature of a diagonal single-qubit state.

#pragma once

#include "qsa/ops.hpp"

#include <optional>

namespace qsa::correlations {

// Concurrence from the spin-flipped matrix rho (sy x sy) rho* (sy x sy);
// eigenvalues clamped at zero before the square roots. In [0, 1].
double concurrence(const Matrix4& rho);

// Binary entropy in base 2, h(0) = h(1) = 0.
double binary_entropy(double x);

// Entanglement of formation h((1 + sqrt(1 - C^2)) / 2), base 2.
double eof(const Matrix4& rho);

// S(rho_S) + S(rho_A) - S(rho_SA) in nats; small negatives are clamped,
// anything below -1e-10 throws (signals broken inputs).
double mutual_information(const Matrix4& rho);

// beta_eff = ln(p0/p1) / (2 omega) for a diagonal qubit state. p1 = 0 maps
// to +infinity, p0 = 0 to -infinity. Throws for omega = 0 or when the
// off-diagonal part exceeds 1e-8 (undefined for coherent states).
double effective_beta(const Matrix2& rho, double omega);

struct CorrelationRecord {
  double concurrence = 0.0;
  double eof = 0.0;           // base 2
  double mutual_info = 0.0;   // nats
  std::optional<double> beta_eff_s;  // empty when the reduced state is coherent
  std::optional<double> beta_eff_a;
};

CorrelationRecord correlation_record(const Matrix4& rho, double omega_s,
                                     double omega_a);

}  // namespace qsa::correlations
