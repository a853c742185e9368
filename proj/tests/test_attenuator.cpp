#include "attenuant/attenuator.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "attenuant/entropy.hpp"
#include "attenuant/majorization.hpp"
#include "attenuant/phase_space.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace attenuant;

namespace {

DensityMatrix bell_pair() {
  const ModeDims d({2, 2});
  std::vector<cplx> amps(4);
  amps[d.index_of({0, 1})] = 1.0 / std::sqrt(2.0);
  amps[d.index_of({1, 0})] = 1.0 / std::sqrt(2.0);
  return projector(make_state(d, amps));
}

DensityMatrix random_pure(std::size_t cutoff, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return projector(
      make_state(ModeDims({cutoff}), oracles::random_unit_vector(cutoff, rng)));
}

}  // namespace

TEST_CASE("transparent and fully reflecting limits") {
  const auto rho = random_pure(3, 31);
  const auto env = random_pure(3, 32);
  const ChannelSpec transparent{1.0, env, 0.0};
  const auto out1 = apply(transparent, rho);
  CHECK(max_abs_diff(partial_trace(out1, {0}).mat, out1.mat) == 0.0);
  CHECK(max_abs_diff(embed(rho, out1.dims).mat, out1.mat) <= 1e-12);

  const ChannelSpec mirror{0.0, env, 0.0};
  const auto out0 = apply(mirror, rho);
  CHECK(max_abs_diff(embed(env, out0.dims).mat, out0.mat) <= 1e-12);
}

TEST_CASE("thermal attenuator at nu = 0 is the pure loss channel") {
  const auto a = thermal_attenuator(0.4, 0.0);
  const auto b = pure_loss(0.4);
  CHECK(a.env.dims.dims[0] == 1);
  CHECK(max_abs_diff(a.env.mat, b.env.mat) == 0.0);
  CHECK(a.env_tail == 0.0);
  CHECK_THROWS_AS(thermal_attenuator(0.4, -1.0), std::invalid_argument);
}

TEST_CASE("bipartite channel at lambda = 1 returns the input") {
  const auto bell = bell_pair();
  const auto out = apply_bipartite(fock_environment(1.0, 2), bell, 1);
  CHECK(max_abs_diff(embed(bell, out.dims).mat, out.mat) <= 1e-12);
  CHECK_THROWS_AS(apply_bipartite(pure_loss(0.5), bell, 2),
                  std::invalid_argument);
}

TEST_CASE("outputs stay physical") {
  const auto rho = random_pure(4, 33);
  const auto spec = thermal_attenuator(0.43, 0.6);
  const auto out = apply(spec, rho);
  const auto c = check_density(out, true);
  CHECK(c.hermiticity <= 1e-12);
  CHECK(c.trace_defect <= 1e-12);
  CHECK(c.min_eig >= -1e-10);
}

TEST_CASE("bell state through a pure loss channel: closed form") {
  // (1-l)/2 |00><00| + l/2 |01><01| + 1/2 |10><10|
  //   + sqrt(l)/2 (|01><10| + |10><01|)
  const double l = 0.36;
  const auto out = apply_bipartite(pure_loss(l), bell_pair(), 1);
  const ModeDims d = out.dims;
  CMat ref(out.mat.rows(), out.mat.cols());
  ref(d.index_of({0, 0}), d.index_of({0, 0})) = (1.0 - l) / 2.0;
  ref(d.index_of({0, 1}), d.index_of({0, 1})) = l / 2.0;
  ref(d.index_of({1, 0}), d.index_of({1, 0})) = 0.5;
  ref(d.index_of({0, 1}), d.index_of({1, 0})) = std::sqrt(l) / 2.0;
  ref(d.index_of({1, 0}), d.index_of({0, 1})) = std::sqrt(l) / 2.0;
  CHECK(max_abs_diff(out.mat, ref) <= 1e-12);
}

TEST_CASE("fock environment reproduces the scheme distributions") {
  // spectrum of omega_AB is {q_l}; the B marginal is diagonal with {p_l}
  for (std::size_t n : {2u, 4u}) {
    for (double l : {0.22, 0.47}) {
      const auto omega = apply_bipartite(fock_environment(l, n), bell_pair(), 1);
      auto spec = hermitian_eigs(omega.mat);
      auto q = q_dist(n, l).dist.weights();
      std::sort(spec.rbegin(), spec.rend());
      std::sort(q.rbegin(), q.rend());
      for (std::size_t i = 0; i < q.size(); ++i)
        CHECK(std::abs(spec[i] - q[i]) <= 1e-10);
      for (std::size_t i = q.size(); i < spec.size(); ++i)
        CHECK(std::abs(spec[i]) <= 1e-10);

      const auto red = partial_trace(omega, {1});
      const auto p = p_dist(n, l).dist;
      for (std::size_t i = 0; i < red.mat.rows(); ++i)
        for (std::size_t j = 0; j < red.mat.cols(); ++j) {
          const double want = (i == j && i < p.size()) ? p[i] : 0.0;
          CHECK(std::abs(red.mat(i, j) - want) <= 1e-10);
        }
    }
  }
}

TEST_CASE("weak complementary at lambda = 1/2 with Fock environments") {
  const auto rho = random_pure(3, 40);
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto spec = fock_environment(0.5, n);
    const auto wc = weak_complementary(spec, rho);
    const auto direct = parity_conjugate(apply(spec, rho));
    CHECK(max_abs_diff(wc.mat, direct.mat) <= 1e-10);
  }
}

TEST_CASE("weak complementary identity for generic environments") {
  // Phi^wc_{l, s} = V . Phi_{1-l, V s V}
  const auto rho = random_pure(3, 41);
  for (const auto& env :
       {random_pure(3, 42), thermal_state(0.4, thermal_cutoff(0.4, 1e-13))}) {
    const double l = 0.31;
    const auto wc = weak_complementary(ChannelSpec{l, env, 0.0}, rho);
    const auto other = parity_conjugate(
        apply(ChannelSpec{1.0 - l, parity_conjugate(env), 0.0}, rho));
    CHECK(max_abs_diff(wc.mat, other.mat) <= 1e-10);
  }
}

TEST_CASE("weak complementary at lambda = 0 returns the input") {
  const auto rho = random_pure(3, 43);
  const auto env = random_pure(2, 44);
  const auto wc = weak_complementary(ChannelSpec{0.0, env, 0.0}, rho);
  // full reflection hands rho to the environment side, up to parity
  const auto expect = parity_conjugate(embed(rho, wc.dims));
  CHECK(max_abs_diff(wc.mat, expect.mat) <= 1e-12);
}

TEST_CASE("displaced-symmetric environment: wc equals V D Phi_{1-l}") {
  // sigma = D(a) sigma0 D(a)^dag with parity-symmetric sigma0 = |1><1|:
  // Phi^wc_{l, sigma} = V . D_{-2 sqrt(l) a} . Phi_{1-l, sigma}
  const double l = 0.5, a = 0.25;
  const std::size_t cut = 18;
  const auto sigma0 = embed(projector(fock_state(ModeDims({2}), {1})),
                            ModeDims({cut}));
  const auto sigma = displace(sigma0, a);
  const auto rho = embed(random_pure(2, 45), ModeDims({6}));

  const auto wc = weak_complementary(ChannelSpec{l, sigma, 0.0}, rho);
  auto rhs = apply(ChannelSpec{1.0 - l, sigma, 0.0}, rho);
  rhs = parity_conjugate(displace(rhs, -2.0 * std::sqrt(l) * a));
  CHECK(max_abs_diff(wc.mat, rhs.mat) <= 1e-6);
}

TEST_CASE("composition: pure loss semigroup") {
  const auto vac = projector(fock_state(ModeDims({1}), {0}));
  CHECK(compose_check(0.7, vac, 0.5, vac) <= 1e-10);
}

TEST_CASE("composition: thermal environments") {
  const auto sigma = thermal_state(0.3, thermal_cutoff(0.3, 1e-12));
  const auto omega = thermal_state(0.7, thermal_cutoff(0.7, 1e-12));
  CHECK(compose_check(0.6, sigma, 0.5, omega) <= 1e-8);
}

TEST_CASE("composition guard near lambda*mu = 1") {
  const auto vac = projector(fock_state(ModeDims({1}), {0}));
  CHECK_THROWS_AS(compose_check(1.0 - 1e-16, vac, 1.0 - 1e-16, vac),
                  std::invalid_argument);
}

TEST_CASE("thermal attenuator leaves its thermal state fixed") {
  const double nu = 0.5, l = 0.37;
  const auto spec = thermal_attenuator(l, nu);
  const auto tau = thermal_state(nu, spec.env.dims.dims[0]);
  const auto out = apply(spec, tau);
  const auto ref = thermal_state(nu, out.dims.dims[0]);
  CHECK(max_abs_diff(out.mat, ref.mat) <= 1e-8);
  CHECK(spec.env_tail < 1e-12);
}

TEST_CASE("output spectrum is phase-rotation invariant for Fock-diag env") {
  const auto spec = fock_environment(0.4, 1);
  const ModeDims d({3});
  std::vector<cplx> amps{0.6, cplx(0.0, 0.64), 0.48};
  const auto rho = projector(make_state(d, amps));
  // rotate phases: e^{i theta n} rho e^{-i theta n}
  const double th = 0.77;
  DensityMatrix rot = rho;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      rot.mat(i, j) *= std::polar(1.0, th * (double(i) - double(j)));
  auto e1 = hermitian_eigs(apply(spec, rho).mat);
  auto e2 = hermitian_eigs(apply(spec, rot).mat);
  for (std::size_t i = 0; i < e1.size(); ++i)
    CHECK(std::abs(e1[i] - e2[i]) <= 1e-12);
}

TEST_CASE("eta chain values and guards") {
  CHECK_THROWS_AS(eta_chain({0.5}), std::invalid_argument);
  CHECK_THROWS_AS(eta_chain({0.5, 0.0}), std::invalid_argument);

  const double s = std::sqrt(0.5);
  const auto etas = eta_chain({s, s});
  CHECK(etas.size() == 1);
  CHECK(etas[0] == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-14));

  // transparent second splitter hits the division guard
  const auto guard = eta_chain({1.0, 1.0});
  CHECK(guard[0] == doctest::Approx(1.0));
  const auto easy = eta_chain({0.3, 1.0});
  CHECK(easy[0] == doctest::Approx(1.0));
}

TEST_CASE("two-splitter cascade equals the single attenuator") {
  const double s = std::sqrt(0.5);
  const auto sigma = projector(fock_state(ModeDims({2}), {1}));
  const auto omega = build_omega(sigma, {s, s});
  const CascadeSpec spec{{s, s}, omega};

  const auto rho = random_pure(4, 50);
  const auto lhs = cascade_apply(spec, rho);
  const auto rhs = apply(ChannelSpec{0.5, sigma, 0.0}, rho);
  const ModeDims big({std::max(lhs.dims.dims[0], rhs.dims.dims[0])});
  CHECK(max_abs_diff(embed(lhs, big).mat, embed(rhs, big).mat) <= 1e-8);
}

TEST_CASE("three-splitter cascade with the xi(1/3) environment") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.3, 0.95);
  std::vector<double> ls{u(rng), u(rng), u(rng)};
  double prod = ls[0] * ls[1] * ls[2];

  std::vector<cplx> xi{std::sqrt(1.0 / 3.0), -std::sqrt(2.0 / 3.0)};
  const auto sigma = projector(make_state(ModeDims({2}), xi));
  const auto omega = build_omega(sigma, ls);
  const CascadeSpec spec{ls, omega};

  const auto rho = random_pure(6, 51);
  const auto lhs = cascade_apply(spec, rho);
  const auto rhs = apply(ChannelSpec{prod, sigma, 0.0}, rho);
  const ModeDims big({std::max(lhs.dims.dims[0], rhs.dims.dims[0])});
  CHECK(max_abs_diff(embed(lhs, big).mat, embed(rhs, big).mat) <= 1e-7);
}

TEST_CASE("cascade with a mixed environment part") {
  // build_omega from a thermal sigma exercises the spectral decomposition
  const auto sigma = thermal_state(0.4, 8);
  const auto ls = std::vector<double>{0.8, 0.7};
  const auto omega = build_omega(sigma, ls);
  CHECK(check_density(omega, false).ok);
  const auto rho = random_pure(3, 52);
  const auto lhs = cascade_apply(CascadeSpec{ls, omega}, rho);
  const auto rhs = apply(ChannelSpec{0.56, sigma, 0.0}, rho);
  const ModeDims big({std::max(lhs.dims.dims[0], rhs.dims.dims[0])});
  CHECK(max_abs_diff(embed(lhs, big).mat, embed(rhs, big).mat) <= 1e-8);
}
