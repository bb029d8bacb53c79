// integrate.hpp — Adaptive embedded Runge-Kutta integration (Dormand-Prince
// 5(4), FSAL) for complex vector ODEs, stepping exactly onto a caller-supplied
// output grid.

#pragma once

#include "qsa/ops.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace qsa::integrate {

struct Options {
  double rtol = 1e-9;
  double atol = 1e-12;
  double first_step = 0.0;  // 0 -> heuristic
};

struct StepUnderflow : std::runtime_error {
  explicit StepUnderflow(double t)
      : std::runtime_error("integrator step underflow at t = " +
                           std::to_string(t)),
        time(t) {}
  double time;
};

namespace detail {
inline double error_norm(const Vector& err, const Vector& y0, const Vector& y1,
                         double atol, double rtol) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < err.size(); ++i) {
    const double sc =
        atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    const double r = std::abs(err[i]) / sc;
    acc += r * r;
  }
  return std::sqrt(acc / static_cast<double>(err.size()));
}
}  // namespace detail

// Integrates y' = f(t, y) from grid.front() through every grid point, calling
// observer(index, t, y) at each one (including index 0). grid must be strictly
// increasing. Throws StepUnderflow if step control collapses.
template <class Rhs, class Observer>
void solve_to_grid(Rhs&& f, Vector y, const std::vector<double>& grid,
                   const Options& opt, Observer&& observer) {
  if (grid.empty()) throw std::invalid_argument("solve_to_grid: empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::invalid_argument("solve_to_grid: grid not increasing");

  // Dormand-Prince 5(4) tableau
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                          e3 = 500.0 / 1113 - 7571.0 / 16695,
                          e4 = 125.0 / 192 - 393.0 / 640,
                          e5 = -2187.0 / 6784 + 92097.0 / 339200,
                          e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

  double t = grid.front();
  Vector k1 = f(t, y);
  observer(std::size_t{0}, t, y);

  double h = opt.first_step;
  if (h <= 0.0) {
    const double d0 = y.norm(), d1 = k1.norm();
    h = (d1 > 1e-12) ? 0.01 * std::max(d0, 1.0) / d1 : 1e-6;
  }

  Vector k2, k3, k4, k5, k6, k7, ynew, err;
  for (std::size_t gi = 1; gi < grid.size(); ++gi) {
    const double t_target = grid[gi];
    while (t < t_target) {
      bool hit = false;
      double hs = h;
      if (t + hs >= t_target) {
        hs = t_target - t;
        hit = true;
      }
      if (hs < 1e-14 * std::max(1.0, std::abs(t))) throw StepUnderflow(t);

      k2 = f(t + a21 * hs, y + hs * (a21 * k1));
      k3 = f(t + 0.3 * hs, y + hs * (a31 * k1 + a32 * k2));
      k4 = f(t + 0.8 * hs, y + hs * (a41 * k1 + a42 * k2 + a43 * k3));
      k5 = f(t + 8.0 / 9.0 * hs,
             y + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
      k6 = f(t + hs, y + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 +
                               a65 * k5));
      ynew = y + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      k7 = f(t + hs, ynew);
      err = hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

      const double en = detail::error_norm(err, y, ynew, opt.atol, opt.rtol);
      if (en <= 1.0) {
        t = hit ? t_target : t + hs;  // land exactly on the grid point
        y.swap(ynew);
        k1.swap(k7);  // FSAL
        const double grow =
            (en > 0.0) ? 0.9 * std::pow(en, -0.2) : 5.0;
        if (!hit) h = hs * std::clamp(grow, 0.2, 5.0);
        else h = std::max(h, hs * std::clamp(grow, 0.2, 5.0));
      } else {
        h = hs * std::max(0.2, 0.9 * std::pow(en, -0.2));
      }
    }
    observer(gi, t, y);
  }
}

}  // namespace qsa::integrate
