#include "qsa/dynamics.hpp"

#include "qsa/integrate.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace qsa::dynamics {

std::vector<double> uniform_grid(double t_max, int n_points) {
  if (n_points < 2 || t_max <= 0.0)
    throw std::invalid_argument("uniform_grid: need t_max > 0, n_points >= 2");
  std::vector<double> g(n_points);
  for (int i = 0; i < n_points; ++i)
    g[i] = t_max * static_cast<double>(i) / (n_points - 1);
  return g;
}

std::vector<double> ramp_grid(double t_max, double t_first, double growth,
                              double dt_cap) {
  if (t_max <= t_first || growth <= 1.0 || dt_cap <= 0.0)
    throw std::invalid_argument("ramp_grid: bad arguments");
  std::vector<double> g{0.0};
  double t = t_first;
  while (t < t_max) {
    g.push_back(t);
    t += std::min(t * (growth - 1.0), dt_cap);
  }
  // avoid a sliver of a final step
  if (t_max - g.back() < 0.25 * dt_cap) g.back() = t_max;
  else g.push_back(t_max);
  return g;
}

Trajectory evolve(const ModelParams& p, const Matrix4& rho0,
                  const std::vector<double>& grid, double rtol, double atol) {
  p.validate();
  const model::Superoperator l = liouvillian_matrix(p);

  Trajectory traj;
  traj.times = grid;
  traj.states.resize(grid.size());

  integrate::Options opt;
  opt.rtol = rtol;
  opt.atol = atol;
  integrate::solve_to_grid(
      [&l](double, const Vector& y) -> Vector { return l * y; },
      ops::vec(rho0), grid, opt,
      [&traj](std::size_t i, double, const Vector& y) {
        const Matrix m = ops::unvec(y, 4);
        traj.states[i] = ops::hermitize(m);
      });
  return traj;
}

SteadyState steady_state(const ModelParams& p) {
  p.validate();
  const model::Superoperator l = liouvillian_matrix(p);

  Eigen::JacobiSVD<Matrix> svd(l, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double null_cut = 1e-10 * sv(0);

  SteadyState out;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) <= null_cut) ++out.null_dim;
  if (out.null_dim == 0)
    throw std::runtime_error("steady_state: numerically empty null space");

  // Among null vectors pick the one carrying the most trace, so a state
  // is still returned when the null space is degenerate.
  double best_trace = -1.0;
  for (Eigen::Index i = sv.size() - out.null_dim; i < sv.size(); ++i) {
    const Matrix cand = ops::hermitize(ops::unvec(svd.matrixV().col(i), 4));
    const double tr = std::abs(cand.trace());
    if (tr > best_trace) {
      best_trace = tr;
      out.state = cand;
    }
  }
  if (best_trace < 1e-12)
    throw std::runtime_error("steady_state: null vector has vanishing trace");

  out.state /= out.state.trace().real();  // also fixes the overall sign
  out.residual =
      (l * ops::vec(out.state)).cwiseAbs().maxCoeff();
  return out;
}

Matrix4 product_steady_state(const ModelParams& p) {
  p.validate();
  if (std::abs(p.jx - p.jy) > 1e-12)
    throw std::invalid_argument(
        "product_steady_state: factorized form requires jx == jy");
  if (p.omega_a == 0.0)
    throw std::invalid_argument("product_steady_state: omega_a must be nonzero");

  const double beta = model::bath_beta(p);
  const double beta_tilde = beta * p.omega_s / p.omega_a;
  const Matrix2 hs = p.omega_s * ops::pauli_z();
  const Matrix2 ha = p.omega_a * ops::pauli_z();
  const Matrix2 gs = model::gibbs_state(hs, beta);
  const Matrix2 ga = model::gibbs_state(ha, beta_tilde);
  return ops::kron(gs, ga);
}

}  // namespace qsa::dynamics
