#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsa/correlations.hpp"
#include "qsa/dynamics.hpp"
#include "test_support.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

using namespace qsa;
using model::ModelParams;

TEST_CASE("stationary initial data stays put when uncoupled") {
  const ModelParams p{1.0, 1.7, 0.0, 0.0, 0.0, 10.0, 1.0};
  const Matrix2 gs =
      model::gibbs_state(p.omega_s * ops::pauli_z(), model::bath_beta(p));
  Matrix2 diag_a = Matrix2::Zero();
  diag_a.diagonal() << 0.3, 0.7;
  const Matrix4 rho0 = ops::kron(gs, diag_a);
  const auto traj = dynamics::evolve(p, rho0, dynamics::uniform_grid(5.0, 11));
  for (const Matrix4& s : traj.states)
    CHECK((s - rho0).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("short-time slope matches the generator") {
  std::mt19937_64 rng(2);
  const ModelParams p{1.0, 0.9, 0.8, 1.1, 0.2, 2.0, 0.4};
  const Matrix4 rho0 = test::random_ginibre_state(rng, 4);
  const double delta = 1e-6;
  const auto traj = dynamics::evolve(p, rho0, {0.0, delta});
  const Matrix4 fd = (traj.states[1] - traj.states[0]) / delta;
  const Matrix4 gen = model::apply_lindbladian(p, rho0);
  CHECK((fd - gen).cwiseAbs().maxCoeff() < 50.0 * delta);
}

TEST_CASE("trace conservation and state checks along trajectories") {
  std::mt19937_64 rng(13);
  const ModelParams p{1.0, 1.2, 1.0, 1.0, 0.0, 1.0, 0.1};
  const Matrix4 rho0 = test::random_ginibre_state(rng, 4);
  const auto traj = dynamics::evolve(p, rho0, dynamics::uniform_grid(20.0, 201));
  for (const Matrix4& s : traj.states) {
    const auto c = ops::check_state(s);
    CHECK(c.trace_defect < 1e-9);
    CHECK(c.hermiticity_defect < 1e-12);
    CHECK(c.min_eigenvalue > -1e-8);
  }
}

TEST_CASE("integrator agrees with the matrix exponential") {
  std::mt19937_64 rng(29);
  const ModelParams p{1.0, 0.6, 1.4, 0.7, -0.3, 5.0, 0.8};
  const Matrix l = model::liouvillian_matrix(p);
  const Matrix4 rho0 = test::random_ginibre_state(rng, 4);
  for (double t : {0.3, 1.7}) {
    const Matrix prop = (l * t).exp();
    const Matrix expect = ops::unvec(prop * ops::vec(rho0), 4);
    const auto traj = dynamics::evolve(p, rho0, {0.0, t});
    CHECK((traj.states[1] - expect).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("steady state via the SVD null space") {
  SUBCASE("factorized case, spec parameters") {
    const ModelParams p{1.0, 1.0, 1.0, 1.0, 0.0, 10.0, 1.0};
    const auto ss = dynamics::steady_state(p);
    CHECK(ss.null_dim == 1);
    CHECK(ss.residual < 1e-10);
    Matrix2 th = Matrix2::Zero();
    th.diagonal() << 10.0 / 11.0, 1.0 / 11.0;
    CHECK((ss.state - ops::kron(th, th)).cwiseAbs().maxCoeff() < 1e-8);
  }

  SUBCASE("uncoupled: degenerate null space is flagged") {
    const ModelParams p{1.0, 1.0, 0.0, 0.0, 0.0, 10.0, 1.0};
    const auto ss = dynamics::steady_state(p);
    CHECK(ss.null_dim > 1);
  }

  SUBCASE("X-form and jz-independence across random draws") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.3, 2.0);
    for (int k = 0; k < 20; ++k) {
      ModelParams p{u(rng), u(rng), u(rng), u(rng), 0.3, 3.0 * u(rng), u(rng)};
      const auto s1 = dynamics::steady_state(p);
      const double off_x =
          std::max({std::abs(s1.state(0, 1)), std::abs(s1.state(0, 2)),
                    std::abs(s1.state(1, 3)), std::abs(s1.state(2, 3))});
      CHECK(off_x < 1e-10);

      ModelParams q = p;
      q.jz = -0.7;
      const auto s2 = dynamics::steady_state(q);
      CHECK((s1.state - s2.state).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("relaxation to the steady state") {
  std::mt19937_64 rng(37);
  const ModelParams p{1.0, 1.0, 0.8, 0.8, 0.0, 2.0, 0.5};
  const auto ss = dynamics::steady_state(p);
  const Matrix4 rho0 = test::random_ginibre_state(rng, 4);
  const double t_long = 10.0 / std::min(p.gamma, p.big_gamma);
  const auto traj = dynamics::evolve(p, rho0, {0.0, t_long});
  CHECK(0.5 * ops::trace_norm(traj.states.back() - ss.state) < 1e-6);
}

TEST_CASE("product steady state") {
  SUBCASE("rejects jx != jy") {
    const ModelParams p{1.0, 1.0, 0.5, 0.7, 0.0, 1.0, 0.1};
    CHECK_THROWS_AS(dynamics::product_steady_state(p), std::invalid_argument);
  }
  SUBCASE("equal frequencies give identical factors") {
    const ModelParams p{1.0, 1.0, 0.6, 0.6, 0.0, 10.0, 1.0};
    const Matrix4 prod = dynamics::product_steady_state(p);
    const Matrix2 s = ops::partial_trace(prod, ops::Subsystem::System);
    const Matrix2 a = ops::partial_trace(prod, ops::Subsystem::Ancilla);
    CHECK((s - a).cwiseAbs().maxCoeff() < 1e-14);
  }
  SUBCASE("ancilla populations are frequency independent") {
    // beta_tilde * omega_a = beta * omega_s, so the A populations match S's
    const ModelParams p{1.0, 2.0, 0.6, 0.6, 0.0, 10.0, 1.0};
    const Matrix4 prod = dynamics::product_steady_state(p);
    const Matrix2 a = ops::partial_trace(prod, ops::Subsystem::Ancilla);
    CHECK(a(0, 0).real() == doctest::Approx(10.0 / 11.0));
    CHECK(a(1, 1).real() == doctest::Approx(1.0 / 11.0));
  }
  SUBCASE("matches the SVD steady state whenever jx == jy") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(0.4, 1.8);
    for (int k = 0; k < 10; ++k) {
      const double j = u(rng);
      ModelParams p{u(rng), u(rng), j, j, 0.2 * u(rng), 4.0 * u(rng), u(rng)};
      const auto ss = dynamics::steady_state(p);
      CHECK((ss.state - dynamics::product_steady_state(p)).cwiseAbs().maxCoeff() <
            1e-8);
    }
  }
}

TEST_CASE("steady-state mutual information vanishes exactly on jx == jy") {
  const ModelParams base{1.0, 1.4, 0.0, 1.0, 0.0, 10.0, 1.0};
  for (double jx : {0.25, 0.7, 1.0, 1.45, 1.9}) {
    ModelParams p = base;
    p.jx = jx;
    const auto ss = dynamics::steady_state(p);
    const double mi = correlations::mutual_information(ss.state);
    if (std::abs(jx - p.jy) < 1e-12)
      CHECK(mi < 1e-9);
    else
      CHECK(mi > 1e-6);
  }
}
