// thermo.hpp — Entropy production and entropy production rates.
//
// Two independent routes are provided on purpose: the algebraic rate
// Tr{L(rho)(ln rho_bar - ln rho)} for the joint semigroup, and finite
// differences of relative-entropy series for reduced systems (no reduced
// generator needed). Their agreement is a cross-check, not an assumption.

#pragma once

#include "qsa/dynamics.hpp"

#include <functional>
#include <vector>

namespace qsa::thermo {

using dynamics::Trajectory;

// S(rho_0 || rho_ref) - S(rho_t || rho_ref). Infinite relative entropies
// propagate as +/-infinity rather than throwing.
double entropy_production(const Matrix& rho_t, const Matrix& rho_0,
                          const Matrix& rho_ref);

struct SpohnRate {
  double value = 0.0;
  // set when rho is rank-deficient enough that the log clamp dominates
  bool near_singular = false;
};

// Tr{L(rho)(ln rho_bar - ln rho)} for any generator given as a callable.
SpohnRate spohn_rate(const std::function<Matrix(const Matrix&)>& l_apply,
                     const Matrix& rho, const Matrix& rho_bar);

// Central finite differences on a (possibly non-uniform) grid, one-sided at
// the endpoints.
std::vector<double> finite_difference(const std::vector<double>& times,
                                      const std::vector<double>& values);

struct RateSeries {
  std::vector<double> rate;
  // Richardson estimate of truncation error exceeded 1e-4 x series scale
  bool coarse_grid_warning = false;
};

// sigma(t) = -d/dt S(rho(t) || rho_ref) by finite differences of the
// relative-entropy series. Also serves d/dt of any scalar series through
// finite_difference directly.
RateSeries reduced_rate(const std::vector<double>& times,
                        const std::vector<Matrix2>& states,
                        const Matrix2& rho_ref);

// | S(rho_SA || tau_S x w_A) - [ I(rho_SA) + S(rho_S||tau_S) + S(rho_A||w_A) ] |
double decomposition_residual(const Matrix4& rho, const Matrix2& tau_s,
                              const Matrix2& w_a);

// Q = Tr[rho_S omega_s sigma_z]
double heat(const Matrix2& rho_s, double omega_s);

// intervals where `series` drops below -threshold (used to compare negative
// entropy-production windows against trace-distance revivals)
struct Window {
  double t_start, t_end, min_value;
};
std::vector<Window> negative_windows(const std::vector<double>& times,
                                     const std::vector<double>& series,
                                     double threshold = 1e-8);

struct ThermoTrajectory {
  std::vector<double> times;
  std::vector<double> sigma_sa;     // algebraic rate for the joint state
  std::vector<double> sigma_s;      // -d/dt S(rho_S || Tr_A rho_inf)
  std::vector<double> sigma_a;      // -d/dt S(rho_A || Tr_S rho_inf)
  std::vector<double> mi_rate;      // d/dt I(rho_SA)
  std::vector<double> entropy_production_s;  // <Sigma>(t) vs rho_ref_s
  std::vector<double> heat_series;  // Tr[rho_S H_S]
  std::vector<double> decomposition_residual;  // |sigma_sa - (s + a - dI)|
  bool coarse_grid_warning = false;
  int near_singular_count = 0;
};

// Assembles every rate series along a joint trajectory. rho_ref_s is the
// reference for the cumulative <Sigma> column (the bath Gibbs state in the
// thermal regime; pass the steady-state marginal otherwise).
ThermoTrajectory thermo_trajectory(const dynamics::ModelParams& p,
                                   const Trajectory& traj,
                                   const Matrix4& rho_inf,
                                   const Matrix2& rho_ref_s);

}  // namespace qsa::thermo
