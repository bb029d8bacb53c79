// nonmarkov.hpp — Trace-distance dynamics for pairs of initial states,
// revival detection, and the information-backflow summary.

#pragma once

#include "qsa/dynamics.hpp"

#include <vector>

namespace qsa::nonmarkov {

// Half the trace norm of the difference.
double trace_distance(const Matrix& rho1, const Matrix& rho2);

struct Revival {
  double t_start, t_end, amplitude;
};

struct DistanceTrajectory {
  std::vector<double> times;
  std::vector<double> d_sa;  // joint pair
  std::vector<double> d_s;   // reduced pair
  std::vector<Revival> revivals;  // rising intervals of d_s
};

// Evolves both product initial states rho_s[12] (x) rho_a0 and records the
// joint and reduced trace distances. Revival intervals are the maximal runs
// where the d_s finite-difference slope exceeds tol_rev, at least two grid
// steps wide.
DistanceTrajectory distance_trajectory(const dynamics::ModelParams& p,
                                       const Matrix2& rho_s1,
                                       const Matrix2& rho_s2,
                                       const Matrix2& rho_a0,
                                       const std::vector<double>& grid,
                                       double tol_rev = 1e-9);

// Total distance increase over the revival intervals.
double backflow_summary(const DistanceTrajectory& d);

}  // namespace qsa::nonmarkov
