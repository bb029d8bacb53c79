// model.hpp — Two-qubit Hamiltonians, the single-bath dissipator acting on
// the system qubit, and the total generator as a superoperator matrix.
//
// The generator is
//   d rho/dt = -i [H_I + H_S + H_A, rho] + D(rho),
//   H_S = omega_s sigma_z (x) 1,  H_A = omega_a 1 (x) sigma_z,
//   H_I = jx sx(x)sx + jy sy(x)sy + jz sz(x)sz,
// with jump operators sigma_- (x) 1 at rate gamma (decay) and
// sigma_+ (x) 1 at rate big_gamma (excitation).

#pragma once

#include "qsa/ops.hpp"

namespace qsa::model {

struct ModelParams {
  double omega_s = 1.0;
  double omega_a = 1.0;
  double jx = 0.0;
  double jy = 0.0;
  double jz = 0.0;
  double gamma = 1.0;      // decay rate (sigma_- channel)
  double big_gamma = 0.1;  // excitation rate (sigma_+ channel)

  // Throws std::invalid_argument unless both rates are positive and all
  // fields are finite.
  void validate() const;
};

// Superoperator acting on column-stacked 4x4 density matrices.
using Superoperator = Eigen::Matrix<Complex, 16, 16>;

// H_S + H_A + H_I, Hermitian 4x4.
Matrix4 hamiltonian_total(const ModelParams& p);

// Full generator applied directly to a state; output is traceless Hermitian.
Matrix4 apply_lindbladian(const ModelParams& p, const Matrix4& rho);

// Matrix form: liouvillian_matrix(p) * vec(rho) == vec(apply_lindbladian(p, rho)).
Superoperator liouvillian_matrix(const ModelParams& p);

// Inverse bath temperature beta = ln(gamma / big_gamma) / (2 omega_s).
// Negative when big_gamma > gamma (population inversion); returned as-is.
double bath_beta(const ModelParams& p);

// exp(-beta h) / Tr exp(-beta h) for Hermitian h.
Matrix gibbs_state(const Matrix& h, double beta);

// max |vec(1)^dag L| — zero for a trace-preserving generator.
double trace_preservation_defect(const Superoperator& l);

}  // namespace qsa::model
