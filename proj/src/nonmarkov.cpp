#include "qsa/nonmarkov.hpp"

#include <stdexcept>

namespace qsa::nonmarkov {

double trace_distance(const Matrix& rho1, const Matrix& rho2) {
  if (rho1.rows() != rho2.rows())
    throw std::invalid_argument("trace_distance: dimension mismatch");
  return 0.5 * ops::trace_norm(rho1 - rho2);
}

DistanceTrajectory distance_trajectory(const dynamics::ModelParams& p,
                                       const Matrix2& rho_s1,
                                       const Matrix2& rho_s2,
                                       const Matrix2& rho_a0,
                                       const std::vector<double>& grid,
                                       double tol_rev) {
  const dynamics::Trajectory t1 =
      dynamics::evolve(p, ops::kron(rho_s1, rho_a0), grid);
  const dynamics::Trajectory t2 =
      dynamics::evolve(p, ops::kron(rho_s2, rho_a0), grid);

  DistanceTrajectory out;
  out.times = grid;
  out.d_sa.resize(grid.size());
  out.d_s.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out.d_sa[i] = trace_distance(t1.states[i], t2.states[i]);
    out.d_s[i] = trace_distance(t1.reduced_s(i), t2.reduced_s(i));
  }

  // rising runs of d_s, at least two grid steps wide
  std::size_t i = 0;
  const std::size_t n = grid.size();
  while (n >= 2 && i + 1 < n) {
    if (out.d_s[i + 1] - out.d_s[i] > tol_rev) {
      std::size_t j = i;
      while (j + 1 < n && out.d_s[j + 1] - out.d_s[j] > tol_rev) ++j;
      if (j - i >= 2)
        out.revivals.push_back({grid[i], grid[j], out.d_s[j] - out.d_s[i]});
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

double backflow_summary(const DistanceTrajectory& d) {
  double total = 0.0;
  for (const Revival& r : d.revivals) total += r.amplitude;
  return total;
}

}  // namespace qsa::nonmarkov
