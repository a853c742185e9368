#include "cli_lib.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "attenuant/attenuator.hpp"
#include "attenuant/beamsplitter.hpp"
#include "attenuant/entropy.hpp"
#include "attenuant/errors.hpp"
#include "attenuant/fock.hpp"
#include "attenuant/majorization.hpp"
#include "attenuant/parallel.hpp"
#include "attenuant/phase_space.hpp"
#include "attenuant/schemes.hpp"
#include "json.hpp"

namespace attenuant_cli {

namespace {

using json = nlohmann::json;
using namespace attenuant;

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

/// Quantize to 12 significant digits so reports are byte-stable.
double sig12(double x) { return std::strtod(fmt12(x).c_str(), nullptr); }

struct Suite {
  std::string name;
  bool pass = true;
  double worst = 0.0;
  json details = json::object();
  json failures = json::array();

  void residual(double r, double tol, const std::string& what, double n = -1.0,
                double lambda = -2.0) {
    worst = std::max(worst, r);
    if (!(r <= tol)) {
      pass = false;
      json f{{"check", what}, {"residual", sig12(r)}, {"tolerance", tol}};
      if (n >= 0.0) f["n"] = n;
      if (lambda > -2.0) f["lambda"] = sig12(lambda);
      failures.push_back(f);
    }
  }

  void require(bool ok, const std::string& what, double n = -1.0,
               double lambda = -2.0) {
    if (!ok) {
      pass = false;
      json f{{"check", what}};
      if (n >= 0.0) f["n"] = n;
      if (lambda > -2.0) f["lambda"] = sig12(lambda);
      failures.push_back(f);
    }
  }
};

std::vector<double> window_grid(std::size_t n, std::size_t points) {
  const double lo = 1.0 / static_cast<double>(n + 1);
  const double hi = 1.0 / static_cast<double>(n);
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i)
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  return g;
}

// ---------------------------------------------------------------------------
// verification suites
// ---------------------------------------------------------------------------

Suite suite_unitarity(const RunConfig&) {
  Suite s{.name = "unitarity"};
  for (std::size_t N : {1u, 2u, 3u, 5u, 8u, 12u, 16u, 20u}) {
    for (int k = 0; k <= 100; ++k) {
      const double l = 0.01 * k;
      const auto b = bs_block(N, l);
      double worst = 0.0;
      for (std::size_t i = 0; i <= N; ++i)
        for (std::size_t j = 0; j <= N; ++j) {
          double dot = 0.0;
          for (std::size_t r = 0; r <= N; ++r) dot += b.at(r, i) * b.at(r, j);
          worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
        }
      s.residual(worst, 1e-12, "block unitarity", double(N), l);
    }
  }
  s.details["grid"] = "N in {1..20}, lambda in {0, 0.01, .., 1}";
  return s;
}

Suite suite_fixtures(const RunConfig&) {
  Suite s{.name = "fixtures"};
  for (int k = 0; k <= 10; ++k) {
    const double l = 0.1 * k;
    const double sl = std::sqrt(l), sc = std::sqrt(1.0 - l);
    const auto b1 = bs_block(1, l);
    const double u1[2][2] = {{sl, -sc}, {sc, sl}};
    double w1 = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        w1 = std::max(w1, std::abs(b1.at(i, j) - u1[i][j]));
    s.residual(w1, 1e-12, "two-level block fixture", 1.0, l);

    const double m = std::sqrt(2.0 * l * (1.0 - l));
    const auto b2 = bs_block(2, l);
    const double u2[3][3] = {
        {l, -m, 1.0 - l}, {m, 2.0 * l - 1.0, -m}, {1.0 - l, m, l}};
    double w2 = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        w2 = std::max(w2, std::abs(b2.at(i, j) - u2[i][j]));
    s.residual(w2, 1e-12, "three-level block fixture", 2.0, l);
  }

  for (std::size_t n = 1; n <= 30; ++n) {
    for (double l : {0.05, 0.3, 0.5, 0.75, 0.95}) {
      const auto bn = bs_block(n, l);
      double w = 0.0;
      for (std::size_t k = 0; k <= n; ++k)
        w = std::max(w, std::abs(bn.at(k, 0) - coeff_0n(n, l, k)));
      s.residual(w, 1e-10, "closed-form row of U|0>|n>", double(n), l);
      const auto bn1 = bs_block(n + 1, l);
      w = 0.0;
      for (std::size_t k = 0; k <= n + 1; ++k)
        w = std::max(w, std::abs(bn1.at(k, 1) - coeff_1n(n, l, k)));
      s.residual(w, 1e-10, "closed-form row of U|1>|n>", double(n), l);
    }
  }
  return s;
}

Suite suite_majorization(const RunConfig& cfg) {
  Suite s{.name = "majorization"};
  const std::size_t nmax = std::max<std::size_t>(2, cfg.n_max);

  std::vector<Suite> per_n(nmax - 1);
  std::vector<double> min_margin(nmax - 1, 1.0);
  parallel_for(nmax - 1, [&](std::size_t idx) {
    const std::size_t n = idx + 2;
    Suite& sn = per_n[idx];
    for (double l : window_grid(n, cfg.grid_points)) {
      const auto p = p_dist(n, l).dist;
      const auto q = q_dist(n, l).dist;
      sn.require(majorizes(q, p), "p majorized by q", double(n), l);
      sn.require(verify_q_sorted(n, l), "q ascending", double(n), l);
      const int pat = verify_p_pattern(n, l);
      if (n >= 4)
        sn.require(pat == 1, "p sorted by swapping the last two pairs",
                   double(n), l);
      // maxima used by the bound chain
      double pmax = 0.0, qmax = 0.0;
      for (std::size_t k = 0; k <= n + 1; ++k) {
        pmax = std::max(pmax, p[k]);
        qmax = std::max(qmax, q[k]);
      }
      sn.require(p[n - 1] >= pmax - 1e-13, "p max at n-1", double(n), l);
      sn.require(q[n + 1] >= qmax - 1e-13, "q max at n+1", double(n), l);
      if (n >= 4)
        sn.require(elementwise_compare(n, l), "entrywise sorted comparison",
                   double(n), l);
      // partial-sum margin: positive means the majorization holds strictly
      const auto pu = p.sorted_ascending(), qu = q.sorted_ascending();
      double ps = 0.0, qs = 0.0;
      for (std::size_t k = 0; k <= n; ++k) {
        ps += pu[k];
        qs += qu[k];
        min_margin[idx] = std::min(min_margin[idx], ps - qs);
      }
    }
  });
  double worst_margin = 1.0;
  for (std::size_t idx = 0; idx < per_n.size(); ++idx) {
    worst_margin = std::min(worst_margin, min_margin[idx]);
    if (!per_n[idx].pass) {
      s.pass = false;
      for (auto& f : per_n[idx].failures) s.failures.push_back(f);
    }
  }
  s.worst = std::max(0.0, -worst_margin);
  s.details["n_max"] = nmax;
  s.details["lambda_points_per_window"] = cfg.grid_points;
  s.details["worst_partial_sum_slack"] = sig12(worst_margin);
  return s;
}

Suite suite_chain(const RunConfig& cfg) {
  Suite s{.name = "chain"};
  const std::size_t nmax = std::max<std::size_t>(3, cfg.n_max);
  for (std::size_t n = 2; n <= nmax; ++n) {
    for (double l : window_grid(n, cfg.grid_points)) {
      if (n == 2 && l > 0.5 - 1e-9) continue;
      const auto r = bound_chain(n, l);
      s.require(r.icoh >= r.kl_sorted - 1e-10, "I >= D(q||p)", double(n), l);
      s.require(r.kl_sorted >= r.tv_term - 1e-12, "D >= TV^2/(2 ln 2)",
                double(n), l);
      s.require(r.tv_term >= r.linf_term - 1e-12, "TV term >= Linf term",
                double(n), l);
      if (n >= 3)
        s.require(r.k_gap >= k_gap_floor(n) - 1e-12, "k-gap floor", double(n), l);
    }
    if (n >= 3) {
      const double at_top = bound_chain(n, 1.0 / double(n)).k_gap;
      s.residual(std::abs(at_top - k_gap_floor(n)), 1e-12,
                 "k-gap equality at lambda = 1/n", double(n), 1.0 / double(n));
    }
  }
  for (double eps : {0.01, 0.05, 0.1, 1.0 / 6.0}) {
    const double gap = bound_chain(2, 0.5 - eps).k_gap;
    s.residual(std::abs(gap - (eps / 4.0 + 3.0 * eps * eps * eps)), 1e-12,
               "n=2 gap expansion", 2.0, 0.5 - eps);
  }
  s.details["n_max"] = nmax;
  return s;
}

Suite suite_entropy(const RunConfig&) {
  Suite s{.name = "entropy"};
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(1e-6, 1.0);
  const double c = 1.0 / (2.0 * std::log(2.0));
  for (int rep = 0; rep < 10000; ++rep) {
    const std::size_t n = 2 + rep % 6;
    std::vector<double> a(n), b(n);
    double sa = 0.0, sb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = u(rng);
      b[i] = u(rng);
      sa += a[i];
      sb += b[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      a[i] /= sa;
      b[i] /= sb;
    }
    double fix_a = 1.0, fix_b = 1.0;
    for (std::size_t i = 1; i < n; ++i) {
      fix_a -= a[i];
      fix_b -= b[i];
    }
    a[0] = fix_a;
    b[0] = fix_b;
    const ProbDist pa(a), pb(b);
    const double kl = kl_divergence(pa, pb);
    const double tv = total_variation(pa, pb);
    s.require(kl >= c * tv * tv - 1e-12, "pinsker");
  }

  for (double x = 0.5; x <= 50.0; x += 1.5)
    for (double y = 0.5; y <= 50.0; y += 1.5) {
      s.require(g(x + y) <= g(x) + g(y) + 1e-12, "g subadditivity");
      s.require(g(0.5 * (x + y)) >= 0.5 * (g(x) + g(y)) - 1e-12, "g concavity");
    }
  s.residual(std::abs(g(100.0) - std::log2(100.0 * std::exp(1.0))), 0.01,
             "g asymptotics at x=100");
  for (double x : {0.1, 0.7, 2.0, 10.0})
    s.residual(std::abs(g_inverse(g(x)) - x), 1e-10, "g inverse round trip");

  for (std::size_t n : {40u, 80u, 120u}) {
    std::mt19937_64 r2(n);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMat h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      h(i, i) = gauss(r2);
      for (std::size_t j = i + 1; j < n; ++j) {
        const cplx v(gauss(r2), gauss(r2));
        h(i, j) = v;
        h(j, i) = std::conj(v);
      }
    }
    const auto e = eig_hermitian(h);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        cplx acc = 0.0;
        for (std::size_t k = 0; k < n; ++k)
          acc += e.vectors(i, k) * e.values[k] * std::conj(e.vectors(j, k));
        worst = std::max(worst, std::abs(acc - h(i, j)));
      }
    s.residual(worst, 1e-10, "eigensolver reconstruction", double(n));
  }
  s.details["pinsker_pairs"] = 10000;
  s.details["g_grid"] = "x, y in {0.5, 2, .., 50}";
  return s;
}

Suite suite_channels(const RunConfig& cfg) {
  Suite s{.name = "channels"};
  const auto vac = projector(fock_state(ModeDims({1}), {0}));
  s.residual(compose_check(0.7, vac, 0.5, vac), 1e-10, "pure-loss semigroup");
  const auto sig = thermal_state(0.3, thermal_cutoff(0.3, 1e-12));
  const auto omg = thermal_state(0.7, thermal_cutoff(0.7, 1e-12));
  s.residual(compose_check(0.6, sig, 0.5, omg), 1e-8, "thermal composition");

  const auto one = projector(fock_state(ModeDims({2}), {1}));
  s.residual(verify_covariance(0.5, one, 0.3, vac, cfg.work_cutoff, 24), 1e-7,
             "covariance, displaced input");
  s.residual(verify_covariance(0.5, vac, cplx(0.2, -0.2), one, cfg.work_cutoff, 24),
             1e-7, "covariance, displaced environment");

  {
    const double nu = 0.5;
    const auto spec = thermal_attenuator(0.37, nu);
    const auto tau = thermal_state(nu, spec.env.dims.dims[0]);
    const auto out = apply(spec, tau);
    const auto ref = thermal_state(nu, out.dims.dims[0]);
    s.residual(max_abs_diff(out.mat, ref.mat), 1e-8, "thermal fixed point");
  }

  {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> amps(3);
    double nrm = 0.0;
    for (auto& a : amps) {
      a = cplx(gauss(rng), gauss(rng));
      nrm += std::norm(a);
    }
    for (auto& a : amps) a /= std::sqrt(nrm);
    const auto rho = projector(make_state(ModeDims({3}), amps));
    for (std::size_t n = 0; n <= 5; ++n) {
      const auto spec = fock_environment(0.5, n);
      const auto wc = weak_complementary(spec, rho);
      const auto direct = parity_conjugate(apply(spec, rho));
      s.residual(max_abs_diff(wc.mat, direct.mat), 1e-10,
                 "weak complementary at 1/2", double(n), 0.5);
    }
  }

  for (double lambda : {0.05, 0.2, 0.35, 0.5})
    for (double nu : {0.0, 0.5, 2.0})
      for (double frac : {0.0, 0.5, 1.0})
        for (double N : {0.1, 0.5, 2.0}) {
          const auto [lo, hi] = lim_bounds(lambda, N, nu, frac * g(nu));
          s.require(lo <= 1e-12, "lim lower bound non-positive", nu, lambda);
          (void)hi;
        }
  s.details["lim_grid"] = "lambda x nu x S x N = 4 x 3 x 3 x 3";
  s.details["work_cutoff"] = cfg.work_cutoff;
  return s;
}

Suite suite_schemes(const RunConfig&) {
  Suite s{.name = "schemes"};
  const auto r1 = scheme1_icoh(1.0 / 3.0, 0.5);
  s.residual(std::abs(r1.icoh - 0.07392), 5e-5, "coherent information at (1/3, 1/2)");
  s.residual(r1.cross_check_residual, 1e-10, "closed-form state at 1/2");

  const auto [eta_star, best] = scheme1_max_over_eta();
  s.residual(std::abs(best - 0.0748), 1e-3, "maximum over eta");
  s.details["eta_star"] = sig12(eta_star);

  for (double eta = 0.1; eta <= 0.91; eta += 0.2) {
    const auto sim = zeta_ab_state(0.5, eta);
    s.residual(max_abs_diff(sim.mat, zeta_ab_closed_form(eta).mat), 1e-10,
               "joint closed form", -1.0, eta);
    s.residual(max_abs_diff(partial_trace(sim, {1}).mat,
                            zeta_b_closed_form(eta).mat),
               1e-10, "marginal closed form", -1.0, eta);
  }

  s.residual(std::abs(scheme2_icoh(10).icoh - 0.274600), 1e-4,
             "fock-pair scheme at n=10");

  for (std::size_t n = 2; n <= 6; ++n)
    for (double l : {0.15, 0.5, 0.85})
      s.residual(main_scheme_icoh(n, l).cross_check_residual, 1e-9,
                 "closed form vs simulation", double(n), l);

  for (int k = 1; k <= 99; k += 2)
    s.require(ppt_check(0.01 * k) < 0.0, "partial transpose witness", -1.0,
              0.01 * k);

  for (double l : {0.01, 0.2, 0.45, 0.5, 0.75, 1.0})
    s.require(capacity_floor(l, 0.05).value > 0.0, "positive floor", -1.0, l);
  s.details["ppt_lambda_grid"] = "0.01 .. 0.99 step 0.02";
  return s;
}

Suite suite_cascade(const RunConfig&) {
  Suite s{.name = "cascade"};
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.3, 0.95);

  const double sq = std::sqrt(0.5);
  const auto one = projector(fock_state(ModeDims({2}), {1}));
  {
    const auto omega = build_omega(one, {sq, sq});
    std::vector<cplx> amps(4);
    amps[0] = 0.6;
    amps[1] = cplx(0.0, 0.8);
    const auto rho = projector(make_state(ModeDims({4}), amps));
    const auto lhs = cascade_apply(CascadeSpec{{sq, sq}, omega}, rho);
    const auto rhs = apply(ChannelSpec{0.5, one, 0.0}, rho);
    const ModeDims big({std::max(lhs.dims.dims[0], rhs.dims.dims[0])});
    s.residual(max_abs_diff(embed(lhs, big).mat, embed(rhs, big).mat), 1e-8,
               "two-splitter equivalence");
  }
  {
    std::vector<cplx> xi{std::sqrt(1.0 / 3.0), -std::sqrt(2.0 / 3.0)};
    const auto sigma = projector(make_state(ModeDims({2}), xi));
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<double> ls{u(rng), u(rng), u(rng)};
      const auto omega = build_omega(sigma, ls);
      std::vector<cplx> amps(6);
      amps[0] = 0.5;
      amps[2] = 0.5;
      amps[5] = 1.0 / std::sqrt(2.0);
      const auto rho = projector(make_state(ModeDims({6}), amps));
      const auto lhs = cascade_apply(CascadeSpec{ls, omega}, rho);
      const auto rhs = apply(ChannelSpec{ls[0] * ls[1] * ls[2], sigma, 0.0}, rho);
      const ModeDims big({std::max(lhs.dims.dims[0], rhs.dims.dims[0])});
      s.residual(max_abs_diff(embed(lhs, big).mat, embed(rhs, big).mat), 1e-7,
                 "three-splitter equivalence");
    }
  }
  s.details["probe_cutoff"] = 6;
  return s;
}

// ---------------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------------

int write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output file: " << path << "\n";
    return kExitOperational;
  }
  f << text;
  return f.good() ? kExitOk : kExitOperational;
}

json config_json(const RunConfig& cfg) {
  json j{{"command", cfg.command},
              {"figure_id", cfg.figure_id},
              {"resolution", cfg.resolution},
              {"n_max", cfg.n_max},
              {"grid_points", cfg.grid_points},
              {"work_cutoff", cfg.work_cutoff},
              {"eps", cfg.eps},
              {"lambda_min", sig12(cfg.lambda_min)},
              {"lambda_max", sig12(cfg.lambda_max)},
              {"floor_points", cfg.floor_points},
              {"suite", cfg.suite},
              {"format", cfg.format},
              {"threads", default_thread_count()}};
  if (cfg.lambda >= 0.0) j["lambda"] = sig12(cfg.lambda);
  return j;
}

int cmd_figures(const RunConfig& cfg) {
  const auto rows = figure_data(cfg.figure_id, cfg.ns, cfg.resolution);
  std::ostringstream csv;
  csv << "curve,x,y\n";
  for (const auto& r : rows)
    csv << r.curve << ',' << fmt12(r.x) << ',' << fmt12(r.y) << '\n';
  const std::string path =
      cfg.out_path.empty() ? cfg.figure_id + ".csv" : cfg.out_path;
  return write_text(path, csv.str());
}

int cmd_verify(const RunConfig& cfg) {
  std::vector<Suite> suites;
  const auto want = [&](const char* name) {
    return cfg.suite == "all" || cfg.suite == name;
  };
  if (want("unitarity")) suites.push_back(suite_unitarity(cfg));
  if (want("fixtures")) suites.push_back(suite_fixtures(cfg));
  if (want("majorization")) suites.push_back(suite_majorization(cfg));
  if (want("chain")) suites.push_back(suite_chain(cfg));
  if (want("entropy")) suites.push_back(suite_entropy(cfg));
  if (want("channels")) suites.push_back(suite_channels(cfg));
  if (want("schemes")) suites.push_back(suite_schemes(cfg));
  if (want("cascade")) suites.push_back(suite_cascade(cfg));
  if (suites.empty()) {
    std::cerr << "unknown suite: " << cfg.suite << "\n";
    return kExitOperational;
  }

  json report;
  report["config"] = config_json(cfg);
  report["suites"] = json::array();
  bool all = true;
  for (const auto& s : suites) {
    all = all && s.pass;
    json js{{"name", s.name},
            {"pass", s.pass},
            {"worst_residual", sig12(s.worst)},
            {"details", s.details}};
    if (!s.failures.empty()) js["failures"] = s.failures;
    report["suites"].push_back(js);
  }
  report["all_pass"] = all;

  const int io = write_text(cfg.out_path, report.dump(2) + "\n");
  if (io != kExitOk) return io;
  return all ? kExitOk : kExitFalsified;
}

int cmd_floor(const RunConfig& cfg) {
  std::vector<double> lambdas;
  if (cfg.lambda >= 0.0) {
    lambdas.push_back(cfg.lambda);
  } else {
    for (std::size_t i = 0; i < cfg.floor_points; ++i)
      lambdas.push_back(cfg.lambda_min +
                        (cfg.lambda_max - cfg.lambda_min) *
                            static_cast<double>(i) /
                            static_cast<double>(cfg.floor_points - 1));
  }

  json report;
  report["config"] = config_json(cfg);
  json points = json::array();
  double global_min = 1e300;
  bool falsified = false;
  std::string method_of_min;
  for (double l : lambdas) {
    json row{{"lambda", sig12(l)}};
    try {
      const auto f = capacity_floor(l, cfg.eps);
      row["floor"] = sig12(f.value);
      row["method"] = f.method;
      switch (f.choice.branch) {
        case SigmaChoice::Branch::vacuum:
          row["sigma"] = "vacuum";
          break;
        case SigmaChoice::Branch::xi_one_third:
          row["sigma"] = "xi(1/3)";
          break;
        case SigmaChoice::Branch::fock:
          row["sigma"] = "fock " + std::to_string(f.choice.n);
          break;
      }
      if (f.value < global_min) {
        global_min = f.value;
        method_of_min = f.method;
      }
    } catch (const consistency_error& e) {
      row["error"] = e.what();
      falsified = true;
    }
    points.push_back(row);
  }
  report["points"] = points;
  report["global_min"] = sig12(global_min);
  report["global_min_method"] = method_of_min;
  // Small-lambda branch approaches (2/ln 2) (1/(4e))^2 = 1/(8 e^2 ln 2).
  const double asym =
      2.0 / std::log(2.0) * std::pow(k_gap_floor(cfg.n_max), 2.0);
  report["small_lambda_floor_at_n_max"] = sig12(asym);
  report["small_lambda_asymptote"] =
      sig12(1.0 / (8.0 * std::exp(2.0) * std::log(2.0)));

  const int io = write_text(cfg.out_path, report.dump(2) + "\n");
  if (io != kExitOk) return io;
  if (falsified || !(global_min > 0.0)) return kExitFalsified;
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"attenuant: general bosonic attenuators on truncated Fock space"};
  app.require_subcommand(1);

  auto* fig = app.add_subcommand("figures", "emit figure tables as CSV");
  fig->add_option("--id", cfg.figure_id,
                  "figure id: icoh_main | icoh_xi | icoh_xi_prime")
      ->required();
  fig->add_option("--n", cfg.ns, "curve selector (n values)")->delimiter(',');
  fig->add_option("--resolution", cfg.resolution, "grid resolution")
      ->check(CLI::Range(std::size_t{2}, std::size_t{2000000}));
  fig->add_option("--out", cfg.out_path, "output CSV path (default <id>.csv)");

  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", cfg.suite,
                  "unitarity | fixtures | majorization | chain | entropy | "
                  "channels | schemes | cascade | all");
  ver->add_option("--nmax", cfg.n_max, "largest Fock level for sweeps")
      ->check(CLI::Range(std::size_t{2}, std::size_t{2000}));
  ver->add_option("--grid", cfg.grid_points, "lambda points per window")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
  ver->add_option("--cutoff", cfg.work_cutoff, "working cutoff for covariance checks")
      ->check(CLI::Range(std::size_t{8}, std::size_t{200}));
  ver->add_option("--out", cfg.out_path, "report path (default stdout)");

  std::size_t threads = 0;
  for (auto* sub : {fig, ver})
    sub->add_option("--threads", threads, "worker threads (default: all cores)");

  auto* flr = app.add_subcommand("floor", "certified capacity floors");
  flr->add_option("--lambda", cfg.lambda, "single transmissivity");
  flr->add_option("--lambda-min", cfg.lambda_min, "sweep lower end");
  flr->add_option("--lambda-max", cfg.lambda_max, "sweep upper end");
  flr->add_option("--points", cfg.floor_points, "sweep size")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
  flr->add_option("--eps", cfg.eps, "branch boundary half-width")
      ->check(CLI::Range(1e-6, 0.16));
  flr->add_option("--nmax", cfg.n_max, "n used for the asymptote report")
      ->check(CLI::Range(std::size_t{3}, std::size_t{100000}));
  flr->add_option("--out", cfg.out_path, "report path (default stdout)");
  flr->add_option("--threads", threads, "worker threads (default: all cores)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      std::cout << app.help();
      return kExitOk;
    }
    std::cerr << e.what() << "\n";
    return kExitOperational;
  }

  if (threads > 0) {
    // parallel_for reads the env var; results do not depend on the count
    setenv("ATTENUANT_THREADS", std::to_string(threads).c_str(), 1);
  }

  try {
    if (app.got_subcommand("figures")) {
      cfg.command = "figures";
      return cmd_figures(cfg);
    }
    if (app.got_subcommand("verify")) {
      cfg.command = "verify";
      return cmd_verify(cfg);
    }
    cfg.command = "floor";
    return cmd_floor(cfg);
  } catch (const consistency_error& e) {
    std::cerr << "falsified: " << e.what() << "\n";
    return kExitFalsified;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOperational;
  }
}

}  // namespace attenuant_cli
