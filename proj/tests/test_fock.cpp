#include "attenuant/fock.hpp"

#include <random>

#include "attenuant/entropy.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace attenuant;

TEST_CASE("basis indexing is a row-major bijection") {
  const ModeDims d({3, 2, 4});
  for (std::size_t i = 0; i < d.total(); ++i) {
    const auto occ = d.occupation_of(i);
    CHECK(d.index_of(occ) == i);
  }
  CHECK(d.index_of({1, 0, 2}) == 1 * 8 + 0 * 4 + 2);
  CHECK_THROWS_AS((void)d.index_of({0, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(ModeDims({2, 0}), std::invalid_argument);
}

TEST_CASE("tensor of vacuum projectors and trace multiplicativity") {
  const auto vac = projector(fock_state(ModeDims({2}), {0}));
  const auto joint = tensor(vac, vac);
  CHECK(joint.dims.mode_count() == 2);
  CHECK(joint.mat(0, 0) == cplx(1.0, 0.0));
  CHECK(std::abs(trace(joint.mat) - 1.0) < 1e-15);

  const auto t1 = thermal_state(1.0, 40);
  const auto tt = tensor(t1, t1);
  CHECK(std::abs(trace(tt.mat) - 1.0) < 1e-12);
}

TEST_CASE("tensor then partial trace is the identity on product inputs") {
  std::mt19937_64 rng(7);
  const ModeDims da({3}), db({4});
  const auto a = projector(make_state(da, oracles::random_unit_vector(3, rng)));
  const auto b = projector(make_state(db, oracles::random_unit_vector(4, rng)));
  const auto joint = tensor(a, b);
  CHECK(max_abs_diff(partial_trace(joint, {0}).mat, a.mat) <= 1e-15);
  CHECK(max_abs_diff(partial_trace(joint, {1}).mat, b.mat) <= 1e-15);
  CHECK_THROWS_AS(partial_trace(joint, {}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(joint, {2}), std::invalid_argument);
}

TEST_CASE("make_state enforces or restores normalization") {
  const ModeDims d({3});
  std::vector<cplx> bad{1.0, 1.0, 0.0};
  CHECK_THROWS_AS(make_state(d, bad), std::invalid_argument);
  const auto fixed = make_state(d, bad, /*renormalize=*/true);
  CHECK(std::abs(fixed.norm() - 1.0) <= 1e-14);
  CHECK_THROWS_AS(make_state(d, {0.0, 0.0, 0.0}, true), std::invalid_argument);
  CHECK_THROWS_AS(make_state(d, {1.0}), std::invalid_argument);
}

TEST_CASE("bell pair marginal is maximally mixed") {
  const ModeDims d({2, 2});
  std::vector<cplx> amps(4);
  amps[d.index_of({0, 1})] = 1.0 / std::sqrt(2.0);
  amps[d.index_of({1, 0})] = 1.0 / std::sqrt(2.0);
  const auto bell = projector(make_state(d, amps));
  const auto red = partial_trace(bell, {0});
  CHECK(red.mat(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(red.mat(1, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(red.mat(0, 1)) < 1e-15);
}

TEST_CASE("number operator and mean photon") {
  const ModeDims d({2, 3});
  const auto num = number_operator(d);
  CHECK(num.mat(d.index_of({1, 2}), d.index_of({1, 2})) == cplx(3.0, 0.0));
  CHECK(mean_photon(projector(fock_state(ModeDims({4}), {0}))) == 0.0);
  CHECK(mean_photon(fock_state(d, {1, 1})) == 2.0);
}

TEST_CASE("thermal state against the geometric-series oracle") {
  CHECK_THROWS_AS(thermal_state(-0.1, 10), std::invalid_argument);
  const auto vac = thermal_state(0.0, 5);
  CHECK(vac.mat(0, 0) == cplx(1.0, 0.0));

  const std::size_t cut = 60;
  const auto tau = thermal_state(0.5, cut);
  // independent evaluation of the renormalized truncated geometric series
  const double r = 0.5 / 1.5;
  double norm = 0.0, mean = 0.0, w = 1.0 / 1.5;
  for (std::size_t n = 0; n < cut; ++n, w *= r) {
    norm += w;
    mean += w * static_cast<double>(n);
  }
  mean /= norm;
  CHECK(mean_photon(tau) == doctest::Approx(mean).epsilon(1e-14));
  CHECK(std::abs(mean_photon(tau) - 0.5) < 1e-10);
  CHECK(std::abs(trace(tau.mat) - 1.0) < 1e-14);

  CHECK(thermal_cutoff(0.0) == 1);
  const std::size_t c7 = thermal_cutoff(0.7, 1e-12);
  CHECK(std::pow(0.7 / 1.7, static_cast<double>(c7)) < 1e-12);
}

TEST_CASE("thermal entropy matches the bosonic entropy function") {
  for (double nu : {0.3, 1.0, 2.5}) {
    const auto tau = thermal_state(nu, thermal_cutoff(nu, 1e-14));
    CHECK(vn_entropy(tau) == doctest::Approx(g(nu)).epsilon(1e-9));
  }
}

TEST_CASE("parity conjugation") {
  const ModeDims d({4});
  const auto n2 = projector(fock_state(d, {2}));
  CHECK(max_abs_diff(parity_conjugate(n2).mat, n2.mat) == 0.0);

  std::mt19937_64 rng(11);
  const auto rho = projector(make_state(d, oracles::random_unit_vector(4, rng)));
  CHECK(max_abs_diff(parity_conjugate(parity_conjugate(rho)).mat, rho.mat) == 0.0);

  // xi(eta) has a |0>,|1> coherence, so parity flips it
  std::vector<cplx> xi(2);
  xi[0] = std::sqrt(1.0 / 3.0);
  xi[1] = -std::sqrt(2.0 / 3.0);
  const auto x = projector(make_state(ModeDims({2}), xi));
  CHECK(max_abs_diff(parity_conjugate(x).mat, x.mat) > 0.1);
}

TEST_CASE("embed and partial transpose") {
  const ModeDims small({2}), big({5});
  const auto rho = projector(fock_state(small, {1}));
  const auto e = embed(rho, big);
  CHECK(e.mat(1, 1) == cplx(1.0, 0.0));
  CHECK(std::abs(trace(e.mat) - 1.0) < 1e-15);

  // partial transpose over mode 0 of |01><10|
  const ModeDims d2({2, 2});
  CMat m(4, 4);
  m(d2.index_of({0, 1}), d2.index_of({1, 0})) = 1.0;
  const auto pt = partial_transpose(DensityMatrix{d2, m}, 0);
  CHECK(pt.mat(d2.index_of({1, 1}), d2.index_of({0, 0})) == cplx(1.0, 0.0));
}

TEST_CASE("density checks accept valid states") {
  const auto tau = thermal_state(0.8, 40);
  const auto c = check_density(tau, true);
  CHECK(c.ok);
  CHECK(c.min_eig >= -1e-15);
}
