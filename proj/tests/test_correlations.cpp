#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsa/correlations.hpp"
#include "qsa/dynamics.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace qsa;
using namespace qsa::correlations;

TEST_CASE("concurrence") {
  CHECK(concurrence(test::bell_phi_plus()) == doctest::Approx(1.0));

  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    const Matrix rs = test::random_ginibre_state(rng, 2);
    const Matrix ra = test::random_ginibre_state(rng, 2);
    CHECK(concurrence(ops::kron(rs, ra)) < 1e-7);
  }

  // Werner state: C = max(0, (3p-1)/2)
  CHECK(concurrence(test::werner(0.8)) == doctest::Approx(0.7).epsilon(1e-9));
  CHECK(concurrence(test::werner(0.2)) == doctest::Approx(0.0));
}

TEST_CASE("entanglement of formation") {
  CHECK(eof(test::bell_phi_plus()) == doctest::Approx(1.0));
  CHECK(eof(test::werner(0.2)) == doctest::Approx(0.0));

  // direct scalar evaluation of h((1+sqrt(1-C^2))/2) at C = 0.7
  const double x = 0.5 * (1.0 + std::sqrt(1.0 - 0.49));
  const double expected = -x * std::log2(x) - (1 - x) * std::log2(1 - x);
  CHECK(eof(test::werner(0.8)) == doctest::Approx(expected).epsilon(1e-9));

  // eof vanishes whenever concurrence does
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const Matrix4 rho = test::random_ginibre_state(rng, 4);
    if (concurrence(rho) == 0.0) CHECK(eof(rho) == 0.0);
  }
}

TEST_CASE("mutual information") {
  std::mt19937_64 rng(7);
  const Matrix rs = test::random_ginibre_state(rng, 2);
  const Matrix ra = test::random_ginibre_state(rng, 2);
  CHECK(mutual_information(ops::kron(rs, ra)) ==
        doctest::Approx(0.0).epsilon(1e-9));

  CHECK(mutual_information(test::bell_phi_plus()) ==
        doctest::Approx(2.0 * std::log(2.0)));

  const model::ModelParams p{1.0, 1.3, 0.9, 0.9, 0.2, 10.0, 1.0};
  CHECK(mutual_information(dynamics::steady_state(p).state) < 1e-9);
}

TEST_CASE("effective inverse temperature") {
  Matrix2 th = Matrix2::Zero();
  th.diagonal() << 10.0 / 11.0, 1.0 / 11.0;
  CHECK(effective_beta(th, 1.0) == doctest::Approx(std::log(10.0) / 2.0));

  CHECK(effective_beta(0.5 * Matrix2::Identity(), 1.0) == doctest::Approx(0.0));

  Matrix2 ground = Matrix2::Zero();
  ground(0, 0) = 1.0;
  CHECK(std::isinf(effective_beta(ground, 1.0)));
  CHECK(effective_beta(ground, 1.0) > 0.0);

  CHECK_THROWS_AS(effective_beta(th, 0.0), std::invalid_argument);

  Matrix2 coherent = 0.5 * Matrix2::Ones();
  CHECK_THROWS_AS(effective_beta(coherent, 1.0), std::invalid_argument);
}

TEST_CASE("steady-sweep structure on a coarse slice of the fig1 grid") {
  // jy = 1, omega_s = 1, gamma = 10, big_gamma = 1; omega_a and jx scanned
  const double beta = std::log(10.0) / 2.0;
  for (double omega_a : {0.5, 1.0, 1.6, 2.0}) {
    for (double jx : {0.0, 0.5, 1.0, 1.5, 2.0}) {
      const model::ModelParams p{1.0, omega_a, jx, 1.0, 0.0, 10.0, 1.0};
      const auto ss = dynamics::steady_state(p);
      const auto rec = correlation_record(ss.state, p.omega_s, p.omega_a);
      if (rec.concurrence == 0.0) CHECK(rec.eof == 0.0);
      CHECK(rec.mutual_info >= -1e-10);
      REQUIRE(rec.beta_eff_s.has_value());
      if (jx == 1.0) {
        CHECK(rec.mutual_info < 1e-8);
        CHECK(*rec.beta_eff_s == doctest::Approx(beta).epsilon(1e-8));
      } else if (rec.mutual_info > 1e-6) {
        // correlated steady state: S runs hotter than the bath
        CHECK(*rec.beta_eff_s < beta);
      }
    }
  }
}
