#include "attenuant/majorization.hpp"

#include <cmath>
#include <random>

#include "attenuant/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace attenuant;

namespace {

std::vector<double> lambda_grid(std::size_t n, std::size_t points = 50) {
  const double lo = 1.0 / static_cast<double>(n + 1);
  const double hi = 1.0 / static_cast<double>(n);
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i)
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  return g;
}

}  // namespace

TEST_CASE("frozen fixture: q(2, 1/2) and its reversal p(2, 1/2)") {
  const auto q = q_dist(2, 0.5).dist;
  CHECK(q[0] == doctest::Approx(0.1875).epsilon(1e-14));
  CHECK(q[1] == doctest::Approx(0.1875).epsilon(1e-14));
  CHECK(q[2] == doctest::Approx(0.3125).epsilon(1e-14));
  CHECK(q[3] == doctest::Approx(0.3125).epsilon(1e-14));
  const auto p = p_dist(2, 0.5).dist;
  for (std::size_t l = 0; l < 4; ++l)
    CHECK(p[l] == doctest::Approx(q[3 - l]).epsilon(1e-14));
  CHECK(std::abs(shannon(p) - shannon(q)) <= 1e-13);
}

TEST_CASE("p and q are permutations of each other at lambda = 1/2") {
  for (std::size_t n : {3u, 6u, 11u}) {
    const auto p = p_dist(n, 0.5).dist;
    const auto q = q_dist(n, 0.5).dist;
    for (std::size_t l = 0; l <= n + 1; ++l)
      CHECK(p[l] == doctest::Approx(q[n + 1 - l]).epsilon(1e-12));
  }
}

TEST_CASE("normalization across the sweep") {
  for (std::size_t n = 2; n <= 200; n += 7) {
    for (double l : lambda_grid(n, 9)) {
      const auto p = p_dist(n, l), q = q_dist(n, l);
      double sp = 0.0, sq = 0.0;
      for (double x : p.dist.weights()) sp += x;
      for (double x : q.dist.weights()) sq += x;
      CHECK(std::abs(sp - 1.0) <= 1e-12);
      CHECK(std::abs(sq - 1.0) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(p_dist(3, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(q_dist(3, 1.0), std::invalid_argument);
}

TEST_CASE("majorizes: uniform below everything, reflexive") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 50; ++rep) {
    const ProbDist r(oracles::random_prob_dist(6, rng));
    const ProbDist u(std::vector<double>(6, 1.0 / 6.0));
    CHECK(majorizes(r, u));
    CHECK(majorizes(r, r));
  }
  // zero padding: (1/2,1/2) vs (1/2,1/2,0)
  CHECK(majorizes(ProbDist({0.5, 0.5, 0.0}), ProbDist({0.5, 0.5})));
  CHECK(majorizes(ProbDist({0.5, 0.5}), ProbDist({0.5, 0.5, 0.0})));
}

TEST_CASE("majorization sweep on a subsample with entropy consistency") {
  for (std::size_t n : {2u, 3u, 7u, 20u, 60u, 200u}) {
    for (double l : lambda_grid(n, 12)) {
      const auto p = p_dist(n, l).dist;
      const auto q = q_dist(n, l).dist;
      CHECK(majorizes(q, p));
      // Schur concavity spot check
      CHECK(shannon(p) >= shannon(q) - 1e-12);
      // Ho-Verdu lower bound on the entropy difference
      const double diff = shannon(p) - shannon(q);
      const double kl = kl_divergence(q.sorted_ascending(), p.sorted_ascending());
      CHECK(diff >= kl - 1e-10);
    }
  }
}

TEST_CASE("threshold functions") {
  for (std::size_t n = 2; n <= 200; ++n) {
    CHECK(lambda_plus(n) >= 1.0 / static_cast<double>(n + 1));
    CHECK(lambda_plus(n) >= 1.0 / static_cast<double>(n));  // needed by the chain
    CHECK(lambda_plus_tilde(n) >= 1.0 / static_cast<double>(n));
    CHECK(lambda_minus(n) <= 1.0 / static_cast<double>(n + 1));
  }
}

TEST_CASE("q is sorted ascending on the certificate interval") {
  for (std::size_t n : {2u, 3u, 10u, 47u, 200u}) {
    const double lo = 1.0 / static_cast<double>(n + 1);
    const double hi = lambda_plus(n);
    for (std::size_t i = 0; i < 12; ++i) {
      const double l = lo + (hi - lo) * static_cast<double>(i) / 11.0;
      CHECK(verify_q_sorted(n, l));
    }
  }
}

TEST_CASE("p follows the swap-last-two-pairs pattern for n >= 4") {
  for (std::size_t n : {4u, 5u, 9u, 33u, 120u}) {
    for (double l : lambda_grid(n, 12)) {
      CHECK(verify_p_pattern(n, l) == 1);
    }
  }
  // n in {2, 3} must match one of the three candidates
  for (std::size_t n : {2u, 3u})
    for (double l : lambda_grid(n, 12)) CHECK(verify_p_pattern(n, l) >= 1);
}

TEST_CASE("maxima sit where the chain needs them") {
  for (std::size_t n : {2u, 5u, 18u, 90u}) {
    for (double l : lambda_grid(n, 9)) {
      const auto p = p_dist(n, l).dist;
      const auto q = q_dist(n, l).dist;
      for (std::size_t k = 0; k <= n + 1; ++k) {
        CHECK(p[n - 1] >= p[k] - 1e-13);
        CHECK(q[n + 1] >= q[k] - 1e-13);
      }
    }
  }
}

TEST_CASE("position-wise inequality below 2/(n+1)") {
  for (std::size_t n : {2u, 6u, 25u}) {
    const double hi = 2.0 / static_cast<double>(n + 1);
    for (std::size_t i = 1; i <= 10; ++i) {
      const double l = hi * static_cast<double>(i) / 11.0;
      const auto p = p_dist(n, l).dist;
      const auto q = q_dist(n, l).dist;
      for (std::size_t k = 0; k <= n - 1; ++k) CHECK(q[k] <= p[k] + 1e-13);
    }
  }
}

TEST_CASE("elementwise compare for n >= 4") {
  for (std::size_t n : {4u, 7u, 31u, 200u})
    for (double l : lambda_grid(n, 12)) CHECK(elementwise_compare(n, l));
  CHECK_THROWS_AS(elementwise_compare(3, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(elementwise_compare(5, 0.5), std::invalid_argument);
}

TEST_CASE("bound chain ordering") {
  for (std::size_t n : {2u, 3u, 12u, 77u}) {
    for (double l : lambda_grid(n, 12)) {
      if (n == 2 && l > 0.5 - 1e-9) continue;  // n=2 needs lambda < 1/2
      const auto r = bound_chain(n, l);
      CHECK(r.icoh >= r.kl_sorted - 1e-10);
      CHECK(r.kl_sorted >= r.tv_term - 1e-12);
      CHECK(r.tv_term >= r.linf_term - 1e-12);
      CHECK(r.k_gap > 0.0);
      CHECK(r.certified == doctest::Approx(r.linf_term).epsilon(1e-9));
    }
  }
}

TEST_CASE("frozen k-gap values") {
  // q_4(3, 1/3) - p_2(3, 1/3) = 4/81, worked out by hand from the closed forms
  const auto r = bound_chain(3, 1.0 / 3.0);
  CHECK(r.k_gap == doctest::Approx(4.0 / 81.0).epsilon(1e-12));
  CHECK(r.certified ==
        doctest::Approx(32.0 / (6561.0 * std::log(2.0))).epsilon(1e-12));

  // n = 2 at lambda = 1/2 - eps: k_gap = eps/4 + 3 eps^3 exactly
  for (double eps : {0.01, 0.05, 0.1, 1.0 / 6.0}) {
    const auto r2 = bound_chain(2, 0.5 - eps);
    CHECK(std::abs(r2.k_gap - (eps / 4.0 + 3.0 * eps * eps * eps)) <= 1e-12);
  }
}

TEST_CASE("k-gap floor: value, monotonicity, and limit") {
  CHECK(k_gap_floor(3) == doctest::Approx(4.0 / 81.0).epsilon(1e-14));
  CHECK_THROWS_AS(k_gap_floor(2), std::invalid_argument);
  for (std::size_t n = 3; n < 300; ++n)
    CHECK(k_gap_floor(n + 1) >= k_gap_floor(n));
  CHECK(k_gap_floor(100000) ==
        doctest::Approx(1.0 / (4.0 * std::exp(1.0))).epsilon(1e-4));

  // floor really floors the gap across the interval
  for (std::size_t n : {3u, 9u, 40u, 200u})
    for (double l : lambda_grid(n, 12))
      CHECK(bound_chain(n, l).k_gap >= k_gap_floor(n) - 1e-12);

  // certified constant in the small-lambda limit
  const double asym = 2.0 / std::log(2.0) * std::pow(k_gap_floor(200), 2.0);
  CHECK(std::abs(asym - 1.0 / (8.0 * std::exp(2.0) * std::log(2.0))) < 1e-3);
}
