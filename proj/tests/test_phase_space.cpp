#include "attenuant/phase_space.hpp"

#include <cmath>
#include <random>

#include "attenuant/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace attenuant;

TEST_CASE("displacement at zero is the identity") {
  const auto d = displacement_matrix(0.0, 12);
  CHECK(max_abs_diff(d.mat, CMat::identity(12)) <= 1e-15);
}

TEST_CASE("vacuum matrix element against the expm oracle") {
  // exact <0|D(a)|0> = exp(-|a|^2/2); also compare a full inner block
  // against the truncated-generator exponential at a larger cutoff.
  const cplx alpha(0.8, 0.3);
  const auto d = displacement_matrix(alpha, 12);
  CHECK(std::abs(d.mat(0, 0) - std::exp(-0.5 * std::norm(alpha))) <= 1e-12);

  const std::size_t big = 36;
  CMat gen(big, big);
  for (std::size_t k = 0; k + 1 < big; ++k) {
    const double s = std::sqrt(static_cast<double>(k + 1));
    gen(k + 1, k) = alpha * s;
    gen(k, k + 1) = -std::conj(alpha) * s;
  }
  const CMat ref = oracles::expm_taylor(gen);
  double worst = 0.0;
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j)
      worst = std::max(worst, std::abs(ref(i, j) - d.mat(i, j)));
  CHECK(worst <= 1e-12);
}

TEST_CASE("displacement composition law on the trusted block") {
  const std::size_t cut = 40;
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int rep = 0; rep < 6; ++rep) {
    cplx a(u(rng), u(rng)), b(u(rng), u(rng));
    a /= std::max(1.0, std::abs(a));
    b /= std::max(1.0, std::abs(b));
    const auto da = displacement_matrix(a, cut);
    const auto db = displacement_matrix(b, cut);
    const auto dab = displacement_matrix(a + b, cut);
    const cplx phase =
        std::exp(0.5 * (a * std::conj(b) - std::conj(a) * b));
    const CMat lhs = matmul(da.mat, db.mat);
    double worst = 0.0;
    const std::size_t blk = 16;  // measured safe block for |a|,|b| <= 1
    for (std::size_t i = 0; i < blk; ++i)
      for (std::size_t j = 0; j < blk; ++j)
        worst = std::max(worst, std::abs(lhs(i, j) - phase * dab.mat(i, j)));
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("displacement unitarity on the margin block") {
  for (const auto& [cut, aabs] : {std::pair<std::size_t, double>{30, 0.3},
                                  {40, 1.0}, {60, 2.0}}) {
    const auto d = displacement_matrix(cplx(aabs / std::sqrt(2.0),
                                            aabs / std::sqrt(2.0)),
                                       cut);
    const CMat prod = matmul(adjoint(d.mat), d.mat);
    const std::size_t blk = displacement_margin_block(cut, aabs);
    REQUIRE(blk >= 5);
    double worst = 0.0;
    for (std::size_t i = 0; i < blk; ++i)
      for (std::size_t j = 0; j < blk; ++j)
        worst = std::max(worst,
                         std::abs(prod(i, j) - (i == j ? cplx(1.0, 0.0) : cplx{})));
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("characteristic function basics") {
  const auto tau = thermal_state(0.5, 30);
  CHECK(std::abs(char_fn(tau, 0.0) - cplx(1.0, 0.0)) <= 1e-13);

  const auto vac = embed(projector(fock_state(ModeDims({1}), {0})), ModeDims({20}));
  for (double a : {0.2, 0.7, 1.3}) {
    CHECK(std::abs(char_fn(vac, a) - std::exp(-0.5 * a * a)) <= 1e-12);
  }

  // |chi| <= 1 on a grid
  std::mt19937_64 rng(81);
  const auto rho =
      projector(make_state(ModeDims({5}), oracles::random_unit_vector(5, rng)));
  const auto rho20 = embed(rho, ModeDims({20}));
  for (int k = 0; k < 25; ++k) {
    const cplx a = std::polar(0.06 * k, 0.5 * k);
    CHECK(std::abs(char_fn(rho20, a)) <= 1.0 + 1e-10);
  }
}

TEST_CASE("chi of the parity conjugate is chi at -alpha") {
  std::mt19937_64 rng(91);
  const auto rho =
      projector(make_state(ModeDims({6}), oracles::random_unit_vector(6, rng)));
  const auto rho24 = embed(rho, ModeDims({24}));
  const auto flipped = parity_conjugate(rho24);
  for (int k = 0; k < 10; ++k) {
    const cplx a = std::polar(0.15 * k, 0.9 * k);
    CHECK(std::abs(char_fn(flipped, a) - char_fn(rho24, -a)) <= 1e-10);
  }
}

TEST_CASE("channel output characteristic function factorizes") {
  // chi_{Phi(rho)}(a) = chi_rho(sqrt(l) a) chi_sigma(sqrt(1-l) a)
  std::mt19937_64 rng(101);
  const auto rho =
      projector(make_state(ModeDims({4}), oracles::random_unit_vector(4, rng)));
  std::vector<cplx> xi{std::sqrt(1.0 / 3.0), -std::sqrt(2.0 / 3.0)};
  const auto sigma = projector(make_state(ModeDims({2}), xi));
  const double l = 0.42;
  const auto out = apply(ChannelSpec{l, sigma, 0.0}, rho);
  for (int k = 0; k < 12; ++k) {
    const cplx a = std::polar(0.125 * (k + 1), 0.7 * k);
    const cplx lhs = char_fn(out, a);
    const cplx rhs = char_fn(rho, std::sqrt(l) * a) *
                     char_fn(sigma, std::sqrt(1.0 - l) * a);
    CHECK(std::abs(lhs - rhs) <= 1e-6);
  }
}

TEST_CASE("covariance identities") {
  const auto vac1 = projector(fock_state(ModeDims({1}), {0}));
  const auto one = projector(fock_state(ModeDims({2}), {1}));

  SUBCASE("z = 0 is exact") {
    CHECK(verify_covariance(0.4, one, 0.0, vac1) <= 1e-12);
  }
  SUBCASE("l=0.5, sigma=|1>, z=0.3, rho=|0> at cutoff 30") {
    CHECK(verify_covariance(0.5, one, 0.3, vac1, 30, 24) <= 1e-7);
  }
  SUBCASE("vacuum environment displaced") {
    CHECK(verify_covariance(0.5, vac1, cplx(0.2, -0.2), one, 30, 24) <= 1e-7);
  }
  SUBCASE("truncation budget is enforced") {
    CHECK_THROWS_AS(verify_covariance(0.5, one, 3.5, vac1, 12, 12),
                    truncation_error);
  }
}
