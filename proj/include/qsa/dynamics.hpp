// dynamics.hpp — Time evolution of the joint 4x4 state and the stationary
// state of the generator.

#pragma once

#include "qsa/model.hpp"

#include <vector>

namespace qsa::dynamics {

using model::ModelParams;

struct Trajectory {
  std::vector<double> times;
  std::vector<Matrix4> states;

  Matrix2 reduced_s(std::size_t i) const {
    return ops::partial_trace(states[i], ops::Subsystem::System);
  }
  Matrix2 reduced_a(std::size_t i) const {
    return ops::partial_trace(states[i], ops::Subsystem::Ancilla);
  }
};

struct SteadyState {
  Matrix4 state;
  int null_dim = 0;       // dimension of the numerical null space of L
  double residual = 0.0;  // max |L(rho_inf)| entrywise
};

// ----------------------------- time grids ------------------------------------

std::vector<double> uniform_grid(double t_max, int n_points);

// {0} followed by a geometric ramp from t_first (spacing grows by `growth`
// per step, capped at dt_cap) up to t_max. Keeps central-difference error
// of t*log(t)-like series at the few-permille level near t = 0.
std::vector<double> ramp_grid(double t_max, double t_first = 1e-4,
                              double growth = 1.01, double dt_cap = 1e-3);

// ----------------------------- evolution -------------------------------------

// Integrates d rho/dt = L(rho) with Dormand-Prince 5(4) at rtol 1e-9 /
// atol 1e-12, landing exactly on the grid; every snapshot is re-hermitized.
Trajectory evolve(const ModelParams& p, const Matrix4& rho0,
                  const std::vector<double>& grid, double rtol = 1e-9,
                  double atol = 1e-12);

// Null space of the superoperator by SVD; singular values below
// 1e-10 * sigma_max count as null. Throws if the null space is empty;
// null_dim > 1 is returned flagged, not rejected.
SteadyState steady_state(const ModelParams& p);

// Gibbs(H_S, beta) (x) Gibbs(H_A, beta*omega_s/omega_a). Only claimed (and
// only permitted) for jx == jy; requires omega_a != 0.
Matrix4 product_steady_state(const ModelParams& p);

}  // namespace qsa::dynamics
