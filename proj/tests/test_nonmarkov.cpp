#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsa/experiments.hpp"
#include "qsa/nonmarkov.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace qsa;
using model::ModelParams;
using experiments::named_state;
using nonmarkov::trace_distance;

TEST_CASE("trace distance basics") {
  const Matrix2 g = named_state("g"), e = named_state("e");
  CHECK(trace_distance(g, g) == doctest::Approx(0.0));
  CHECK(trace_distance(g, e) == doctest::Approx(1.0));

  Matrix2 d = Matrix2::Zero();
  d.diagonal() << 0.75, 0.25;
  CHECK(trace_distance(d, 0.5 * Matrix2::Identity()) == doctest::Approx(0.25));

  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const Matrix a = test::random_ginibre_state(rng, 4);
    const Matrix b = test::random_ginibre_state(rng, 4);
    const double dd = trace_distance(a, b);
    CHECK(dd >= 0.0);
    CHECK(dd <= 1.0 + 1e-10);
  }
}

TEST_CASE("trace distance is invariant under the unitary part alone") {
  // rates must be positive for validate(); vanishingly small keeps the
  // evolution unitary to the tested tolerance
  const ModelParams p{1.0, 1.3, 0.8, 0.5, 0.3, 1e-13, 1e-13};
  std::mt19937_64 rng(5);
  const Matrix r1 = test::random_ginibre_state(rng, 4);
  const Matrix r2 = test::random_ginibre_state(rng, 4);
  const double before = trace_distance(r1, r2);
  const auto grid = dynamics::uniform_grid(4.0, 9);
  const auto t1 = dynamics::evolve(p, r1, grid);
  const auto t2 = dynamics::evolve(p, r2, grid);
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(trace_distance(t1.states[i], t2.states[i]) ==
          doctest::Approx(before).epsilon(1e-7));
}

TEST_CASE("revivals in the reduced distance, monotone joint distance") {
  const ModelParams p{1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.1};
  const auto grid = dynamics::uniform_grid(25.0, 2001);

  SUBCASE("fig2a pair {g, e}") {
    const auto d = nonmarkov::distance_trajectory(p, named_state("g"),
                                                  named_state("e"),
                                                  named_state("plus"), grid);
    CHECK(d.revivals.size() >= 1);
    for (std::size_t i = 1; i < grid.size(); ++i)
      CHECK(d.d_sa[i] <= d.d_sa[i - 1] + 1e-7);
    CHECK(nonmarkov::backflow_summary(d) > 0.0);
  }

  SUBCASE("fig2b pair {plus, minus}") {
    const auto d = nonmarkov::distance_trajectory(p, named_state("plus"),
                                                  named_state("minus"),
                                                  named_state("plus"), grid);
    CHECK(d.revivals.size() >= 1);
    for (std::size_t i = 1; i < grid.size(); ++i)
      CHECK(d.d_sa[i] <= d.d_sa[i - 1] + 1e-7);
  }

  SUBCASE("uncoupled dynamics has no revivals") {
    ModelParams q = p;
    q.jx = q.jy = 0.0;
    const auto d = nonmarkov::distance_trajectory(q, named_state("g"),
                                                  named_state("e"),
                                                  named_state("plus"), grid);
    CHECK(d.revivals.empty());
    for (std::size_t i = 1; i < grid.size(); ++i)
      CHECK(d.d_s[i] <= d.d_s[i - 1] + 1e-9);
  }
}

TEST_CASE("backflow summary of a synthetic dip") {
  nonmarkov::DistanceTrajectory d;
  d.times = {0, 1, 2, 3, 4, 5, 6};
  d.d_s = {0.5, 0.3, 0.2, 0.25, 0.3, 0.28, 0.2};
  d.d_sa = d.d_s;
  // rebuild revivals exactly as distance_trajectory would: rising runs
  nonmarkov::DistanceTrajectory scan;
  std::size_t i = 0;
  while (i + 1 < d.d_s.size()) {
    if (d.d_s[i + 1] - d.d_s[i] > 1e-9) {
      std::size_t j = i;
      while (j + 1 < d.d_s.size() && d.d_s[j + 1] - d.d_s[j] > 1e-9) ++j;
      if (j - i >= 2)
        d.revivals.push_back({d.times[i], d.times[j], d.d_s[j] - d.d_s[i]});
      i = j;
    } else {
      ++i;
    }
  }
  CHECK(nonmarkov::backflow_summary(d) == doctest::Approx(0.1));
}
