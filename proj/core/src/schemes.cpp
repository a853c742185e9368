#include "attenuant/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "attenuant/attenuator.hpp"
#include "attenuant/beamsplitter.hpp"
#include "attenuant/entropy.hpp"
#include "attenuant/errors.hpp"
#include "attenuant/majorization.hpp"
#include "attenuant/parallel.hpp"

namespace attenuant {

namespace {

/// S(B) - S(AB) of a pure (A,B,E) state, using S(AB) = S(E).
double icoh_pure_abe(const StateVector& psi) {
  const std::size_t da = psi.dims.dims[0], db = psi.dims.dims[1],
                    de = psi.dims.dims[2];
  CMat rho_e(de, de), rho_b(db, db);
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t b = 0; b < db; ++b) {
      const cplx* row = psi.amps.data() + (a * db + b) * de;
      for (std::size_t e1 = 0; e1 < de; ++e1) {
        if (row[e1] == cplx{}) continue;
        for (std::size_t e2 = 0; e2 < de; ++e2)
          rho_e(e1, e2) += row[e1] * std::conj(row[e2]);
      }
    }
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t b1 = 0; b1 < db; ++b1)
      for (std::size_t b2 = 0; b2 < db; ++b2) {
        cplx s = 0.0;
        const cplx* r1 = psi.amps.data() + (a * db + b1) * de;
        const cplx* r2 = psi.amps.data() + (a * db + b2) * de;
        for (std::size_t e1 = 0; e1 < de; ++e1) s += r1[e1] * std::conj(r2[e1]);
        rho_b(b1, b2) += s;
      }
  return spectrum_entropy(eigvals_hermitian(rho_b)) -
         spectrum_entropy(eigvals_hermitian(rho_e));
}

DensityMatrix reduce_ab(const StateVector& psi) {
  const std::size_t da = psi.dims.dims[0], db = psi.dims.dims[1],
                    de = psi.dims.dims[2];
  CMat m(da * db, da * db);
  for (std::size_t i = 0; i < da * db; ++i)
    for (std::size_t j = 0; j < da * db; ++j) {
      cplx s = 0.0;
      for (std::size_t e1 = 0; e1 < de; ++e1)
        s += psi.amps[i * de + e1] * std::conj(psi.amps[j * de + e1]);
      m(i, j) = s;
    }
  return DensityMatrix{ModeDims({da, db}), std::move(m)};
}

StateVector zeta_input(double eta) {
  const ModeDims d({2, 2, 2});
  std::vector<cplx> amps(8);
  const double se = std::sqrt(eta), sc = std::sqrt(1.0 - eta);
  // Psi(eta)_AB (x) xi(eta)_E
  const double psi00 = se * sc, psi01 = 1.0 - eta, psi10 = se;
  const double xi0 = se, xi1 = -sc;
  amps[d.index_of({0, 0, 0})] = psi00 * xi0;
  amps[d.index_of({0, 0, 1})] = psi00 * xi1;
  amps[d.index_of({0, 1, 0})] = psi01 * xi0;
  amps[d.index_of({0, 1, 1})] = psi01 * xi1;
  amps[d.index_of({1, 0, 0})] = psi10 * xi0;
  amps[d.index_of({1, 0, 1})] = psi10 * xi1;
  return StateVector{d, std::move(amps)};
}

StateVector zeta_pure(double lambda, double eta) {
  return bs_apply_modes(zeta_input(eta), 1, 2, lambda);
}

double mode_mean_photon(const StateVector& psi, std::size_t mode) {
  double s = 0.0;
  for (std::size_t i = 0; i < psi.amps.size(); ++i)
    s += std::norm(psi.amps[i]) *
         static_cast<double>(psi.dims.occupation_of(i)[mode]);
  return s;
}

}  // namespace

DensityMatrix zeta_ab_state(double lambda, double eta) {
  return reduce_ab(zeta_pure(lambda, eta));
}

DensityMatrix zeta_ab_closed_form(double eta) {
  const double e = eta, c = 1.0 - eta, s2 = std::sqrt(2.0);
  const double se = std::sqrt(e), sc = std::sqrt(c);
  CMat m(6, 6);
  m(0, 0) = 0.5 * (1.0 + e - 3.0 * e * e + e * e * e);
  m(0, 2) = -c * c * e / s2;
  m(0, 3) = e * sc;
  m(0, 4) = -c * e * se / s2;
  m(2, 2) = 0.5 * c * c * c;
  m(2, 3) = -c * sc * e / s2;
  m(2, 4) = 0.5 * c * c * se;
  m(3, 3) = 0.5 * e * (1.0 + e);
  m(3, 4) = -e * se * sc / s2;
  m(4, 4) = 0.5 * c * e;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < i; ++j) m(i, j) = std::conj(m(j, i));
  return DensityMatrix{ModeDims({2, 3}), std::move(m)};
}

DensityMatrix zeta_b_closed_form(double eta) {
  const double e = eta, c = 1.0 - eta, s2 = std::sqrt(2.0);
  const double se = std::sqrt(e), sc = std::sqrt(c);
  CMat m(3, 3);
  m(0, 0) = 0.5 * (1.0 + 2.0 * e - 2.0 * e * e + e * e * e);
  m(0, 1) = -e * se * sc / s2;
  m(0, 2) = -c * c * e / s2;
  m(1, 1) = 0.5 * c * e;
  m(2, 2) = 0.5 * c * c * c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < i; ++j) m(i, j) = std::conj(m(j, i));
  return DensityMatrix{ModeDims({3}), std::move(m)};
}

SchemeResult scheme1_icoh(double eta, double lambda) {
  if (!(eta >= 0.0 && eta <= 1.0))
    throw std::invalid_argument("scheme1_icoh: eta must be in [0, 1]");
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("scheme1_icoh: lambda must be in [0, 1]");

  SchemeResult r;
  r.scheme_id = "xi";
  r.eta = eta;
  r.lambda = lambda;
  r.cutoff = 3;
  const StateVector input = zeta_input(eta);
  // Only |0>_A |1>_B carries a photon on B: the measured value is (1-eta)^2.
  r.energy = mode_mean_photon(input, 1);
  if (eta == 0.0 || eta == 1.0) {
    r.degenerate = true;  // the ansatz factorizes, nothing is transmitted
    r.icoh = 0.0;
    return r;
  }
  const StateVector psi = bs_apply_modes(input, 1, 2, lambda);
  r.icoh = icoh_pure_abe(psi);
  if (lambda == 0.5) {
    r.cross_check_residual =
        max_abs_diff(reduce_ab(psi).mat, zeta_ab_closed_form(eta).mat);
    if (r.cross_check_residual > 1e-10)
      throw consistency_error("scheme1_icoh: simulation disagrees with the closed form");
  }
  return r;
}

std::pair<double, double> scheme1_max_over_eta(std::size_t grid) {
  if (grid < 3) throw std::invalid_argument("scheme1_max_over_eta: grid too small");
  std::vector<double> vals(grid);
  parallel_for(grid, [&](std::size_t i) {
    const double eta = static_cast<double>(i) / static_cast<double>(grid - 1);
    vals[i] = scheme1_icoh(eta, 0.5).icoh;
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < grid; ++i)
    if (vals[i] > vals[best]) best = i;

  const double step = 1.0 / static_cast<double>(grid - 1);
  double lo = best == 0 ? 0.0 : (best - 1) * step;
  double hi = best + 1 >= grid ? 1.0 : (best + 1) * step;
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = scheme1_icoh(x1, 0.5).icoh, f2 = scheme1_icoh(x2, 0.5).icoh;
  for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = scheme1_icoh(x2, 0.5).icoh;
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = scheme1_icoh(x1, 0.5).icoh;
    }
  }
  const double eta_star = 0.5 * (lo + hi);
  return {eta_star, scheme1_icoh(eta_star, 0.5).icoh};
}

SchemeResult scheme2_icoh(std::size_t n, std::size_t pad) {
  if (n < 3) throw std::invalid_argument("scheme2_icoh: n >= 3 required");
  const std::size_t db = n + 1 + pad, de = n + 1 + pad;
  const ModeDims d({2, db, de});
  std::vector<cplx> amps(d.total());
  const double a0 = 0.5, x = 1.0 / std::sqrt(2.0);
  // Input ansatz (1/2)(|0>(|n-1>+|n>) + |1>(|n-3>+|n-2>)); environment is
  // the Fock-pair superposition (|n-1> - |n>)/sqrt(2). The relative sign
  // between the two arms picks the transmitting interference branch.
  const double xi[2] = {x, -x};
  const std::size_t b_for_a[2][2] = {{n - 1, n}, {n - 3, n - 2}};
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t j = 0; j < 2; ++j)
        amps[d.index_of({a, b_for_a[a][k], n - 1 + j})] += a0 * xi[j];
  StateVector psi{d, std::move(amps)};

  SchemeResult r;
  r.scheme_id = "xi_prime";
  r.n = n;
  r.lambda = 0.5;
  r.energy = mode_mean_photon(psi, 1);  // n - 3/2 by construction
  const StateVector out = bs_apply_modes(psi, 1, 2, 0.5);
  r.cutoff = out.dims.dims[1];
  r.icoh = icoh_pure_abe(out);
  return r;
}

SchemeResult main_scheme_icoh(std::size_t n, double lambda) {
  if (n < 1) throw std::invalid_argument("main_scheme_icoh: n >= 1 required");
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::invalid_argument("main_scheme_icoh: lambda must be in (0, 1)");

  SchemeResult r;
  r.scheme_id = "fock";
  r.n = n;
  r.lambda = lambda;
  r.cutoff = n + 2;
  const auto p = p_dist(n, lambda), q = q_dist(n, lambda);
  r.icoh = shannon(p.dist) - shannon(q.dist);

  const ModeDims bell_dims({2, 2});
  std::vector<cplx> amps(4);
  const double x = 1.0 / std::sqrt(2.0);
  amps[bell_dims.index_of({0, 1})] = x;
  amps[bell_dims.index_of({1, 0})] = x;
  const StateVector bell_psi{bell_dims, amps};
  r.energy = mode_mean_photon(bell_psi, 1);  // 1/2 for the Bell ansatz

  if (n <= 6) {
    const DensityMatrix bell = projector(bell_psi);
    const DensityMatrix omega =
        apply_bipartite(fock_environment(lambda, n), bell, 1);
    const double sim = coherent_info(omega, {1});
    r.cross_check_residual = std::abs(sim - r.icoh);
    if (r.cross_check_residual > 1e-9)
      throw consistency_error("main_scheme_icoh: closed form disagrees with simulation");
  }
  return r;
}

SigmaChoice sigma_selector(double lambda, double eps) {
  if (!(lambda > 0.0 && lambda <= 1.0))
    throw std::invalid_argument("sigma_selector: lambda must be in (0, 1]");
  if (!(eps > 0.0 && eps < 1.0 / 6.0))
    throw std::invalid_argument("sigma_selector: eps must be in (0, 1/6)");
  SigmaChoice c;
  c.eps = eps;
  if (lambda > 0.5 + eps) {
    c.branch = SigmaChoice::Branch::vacuum;
  } else if (lambda > 0.5 - eps) {
    c.branch = SigmaChoice::Branch::xi_one_third;
  } else if (lambda > 1.0 / 3.0) {
    c.branch = SigmaChoice::Branch::fock;
    c.n = 2;
  } else {
    c.branch = SigmaChoice::Branch::fock;
    c.n = static_cast<std::size_t>(std::floor(1.0 / lambda + 1e-9));
  }
  return c;
}

DensityMatrix sigma_state(const SigmaChoice& choice) {
  switch (choice.branch) {
    case SigmaChoice::Branch::vacuum:
      return projector(fock_state(ModeDims({1}), {0}));
    case SigmaChoice::Branch::xi_one_third: {
      std::vector<cplx> amps{std::sqrt(1.0 / 3.0), -std::sqrt(2.0 / 3.0)};
      return projector(make_state(ModeDims({2}), std::move(amps)));
    }
    case SigmaChoice::Branch::fock:
      return projector(fock_state(ModeDims({choice.n + 1}), {choice.n}));
  }
  throw std::logic_error("sigma_state: unreachable");
}

FloorResult capacity_floor(double lambda, double eps) {
  // The Fock branch needs the length-(1/lambda) distributions; keep the
  // memory bounded.
  if (lambda < 1e-6)
    throw std::invalid_argument(
        "capacity_floor: lambda below 1e-6 needs Fock levels beyond 10^6");
  FloorResult f;
  f.choice = sigma_selector(lambda, eps);
  switch (f.choice.branch) {
    case SigmaChoice::Branch::vacuum:
      f.value = pure_loss_capacity(lambda, 0.5);
      f.method = "pure-loss";
      break;
    case SigmaChoice::Branch::xi_one_third: {
      const double cert = afw_certificate_at(lambda);
      if (cert > 0.0) {
        f.value = cert;
        f.method = "afw-continuity";
      } else {
        f.value = scheme1_icoh(1.0 / 3.0, lambda).icoh;
        f.method = "coherent-information";
      }
      break;
    }
    case SigmaChoice::Branch::fock:
      f.value = bound_chain(f.choice.n, lambda).certified;
      f.method = "bound-chain";
      break;
  }
  if (!(f.value > 0.0))
    throw consistency_error("capacity_floor: non-positive certificate at lambda=" +
                            std::to_string(lambda));
  return f;
}

double ppt_check(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("ppt_check: lambda must be in [0, 1]");
  const ModeDims bell_dims({2, 2});
  std::vector<cplx> amps(4);
  const double x = 1.0 / std::sqrt(2.0);
  amps[bell_dims.index_of({0, 1})] = x;
  amps[bell_dims.index_of({1, 0})] = x;
  const DensityMatrix bell = projector(StateVector{bell_dims, amps});
  const DensityMatrix out = apply_bipartite(pure_loss(lambda), bell, 1);
  const auto ev = hermitian_eigs(partial_transpose(out, 0).mat);
  return ev.front();
}

std::vector<FigureRow> figure_data(const std::string& figure_id,
                                   const std::vector<std::size_t>& ns,
                                   std::size_t resolution) {
  if (resolution < 2) throw std::invalid_argument("figure_data: resolution >= 2");
  std::vector<FigureRow> rows;
  if (figure_id == "icoh_main") {
    const std::vector<std::size_t> curves = ns.empty()
                                                ? std::vector<std::size_t>{2, 5, 10, 20}
                                                : ns;
    for (std::size_t n : curves) {
      const std::size_t base = rows.size();
      rows.resize(base + resolution);
      parallel_for(resolution, [&, n, base](std::size_t i) {
        const double lambda = static_cast<double>(i + 1) /
                              static_cast<double>(resolution + 1);
        rows[base + i] = FigureRow{"n=" + std::to_string(n), lambda,
                                   main_scheme_icoh(n, lambda).icoh};
      });
    }
  } else if (figure_id == "icoh_xi") {
    rows.resize(resolution);
    parallel_for(resolution, [&](std::size_t i) {
      const double eta =
          static_cast<double>(i) / static_cast<double>(resolution - 1);
      rows[i] = FigureRow{"xi", eta, scheme1_icoh(eta, 0.5).icoh};
    });
  } else if (figure_id == "icoh_xi_prime") {
    std::vector<std::size_t> xs = ns;
    if (xs.empty())
      for (std::size_t n = 3; n <= 35; ++n) xs.push_back(n);
    rows.resize(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) {
      rows[i] = FigureRow{"xi_prime", static_cast<double>(xs[i]),
                          scheme2_icoh(xs[i]).icoh};
    });
  } else {
    throw std::invalid_argument("figure_data: unknown figure id " + figure_id);
  }
  return rows;
}

}  // namespace attenuant
