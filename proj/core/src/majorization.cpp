#include "attenuant/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "attenuant/errors.hpp"

namespace attenuant {

namespace {

constexpr double kSlack = 1e-12;

void check_nl(std::size_t n, double lambda, std::size_t n_min) {
  if (n < n_min)
    throw std::invalid_argument("scheme distribution: n too small");
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::invalid_argument("scheme distribution: lambda must be in (0, 1)");
}

double log_binom(std::size_t n, std::size_t k) {
  return std::lgamma(double(n + 1)) - std::lgamma(double(k + 1)) -
         std::lgamma(double(n - k + 1));
}

double binom_exact(std::size_t n, std::size_t k) {
  double c = 1.0;
  for (std::size_t j = 1; j <= k; ++j)
    c *= static_cast<double>(n - k + j) / static_cast<double>(j);
  return c;
}

/// Common evaluation of the two closed forms: prefactor, binomial, powers,
/// and a bracket that differs between p and q. Exact binomials below
/// n = 40, log-gamma accumulation above (values under the double range
/// flush to zero, which every consumer treats as exact zero mass).
std::vector<double> scheme_weights(std::size_t n, double lambda, bool is_p) {
  const double nl = static_cast<double>(n);
  std::vector<double> w(n + 2);
  const double l1 = 1.0 - lambda;
  for (std::size_t l = 0; l <= n + 1; ++l) {
    const double ld = static_cast<double>(l);
    const double shifted = (nl + 1.0) * l1 - ld;
    const double bracket =
        is_p ? l1 * (nl - ld + 1.0) + shifted * shifted
             : lambda * ld + shifted * shifted;
    if (n <= 40) {
      w[l] = binom_exact(n + 1, l) * std::pow(l1, ld) *
             std::pow(lambda, nl - ld) * bracket /
             (2.0 * (nl + 1.0) * l1);
    } else {
      if (bracket <= 0.0) {
        w[l] = 0.0;
        continue;
      }
      const double lg = log_binom(n + 1, l) + ld * std::log(l1) +
                        (nl - ld) * std::log(lambda) + std::log(bracket) -
                        std::log(2.0 * (nl + 1.0) * l1);
      w[l] = lg < -745.0 ? 0.0 : std::exp(lg);
    }
  }
  return w;
}

}  // namespace

SchemeDist p_dist(std::size_t n, double lambda) {
  check_nl(n, lambda, 1);
  return SchemeDist{n, lambda, ProbDist(scheme_weights(n, lambda, true))};
}

SchemeDist q_dist(std::size_t n, double lambda) {
  check_nl(n, lambda, 1);
  return SchemeDist{n, lambda, ProbDist(scheme_weights(n, lambda, false))};
}

bool majorizes(const ProbDist& s, const ProbDist& r) {
  std::vector<double> su = s.weights(), ru = r.weights();
  const std::size_t len = std::max(su.size(), ru.size());
  su.resize(len, 0.0);
  ru.resize(len, 0.0);
  std::stable_sort(su.begin(), su.end());
  std::stable_sort(ru.begin(), ru.end());
  double ps = 0.0, pr = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    ps += su[k];
    pr += ru[k];
    if (pr < ps - kSlack) return false;
  }
  return true;
}

double lambda_plus(std::size_t n) {
  const double nd = static_cast<double>(n);
  return 3.0 / (nd + 2.0) * (1.0 - std::sqrt((nd - 1.0) / (3.0 * (nd + 1.0))));
}

double lambda_minus(std::size_t n) {
  const double nd = static_cast<double>(n);
  return 2.0 / (nd + 2.0) * (1.0 - std::sqrt(nd / (2.0 * (nd + 1.0))));
}

double lambda_plus_tilde(std::size_t n) {
  const double c3 = std::cbrt(3.0), c2 = std::cbrt(2.0);
  return c3 / (c2 * static_cast<double>(n) + c3 - c2);
}

bool verify_q_sorted(std::size_t n, double lambda) {
  const auto& q = q_dist(n, lambda).dist;
  for (std::size_t l = 0; l + 1 < q.size(); ++l)
    if (q[l + 1] < q[l] - kSlack) return false;
  return true;
}

int verify_p_pattern(std::size_t n, double lambda) {
  if (n < 2) throw std::invalid_argument("verify_p_pattern: n >= 2 required");
  const auto& p = p_dist(n, lambda).dist;
  // Candidate orderings differ only in the last four slots.
  const std::size_t tails[3][4] = {
      {n, n + 1, n - 2, n - 1}, {n, n - 2, n + 1, n - 1}, {n - 2, n, n + 1, n - 1}};
  for (int pat = 0; pat < 3; ++pat) {
    std::vector<std::size_t> order;
    for (std::size_t l = 0; l + 3 <= n; ++l) order.push_back(l);  // 0..n-3
    for (std::size_t t = 0; t < 4; ++t) order.push_back(tails[pat][t]);
    bool ok = true;
    for (std::size_t k = 0; k + 1 < order.size(); ++k)
      if (p[order[k + 1]] < p[order[k]] - kSlack) {
        ok = false;
        break;
      }
    if (ok) return pat + 1;
  }
  throw consistency_error("verify_p_pattern: no candidate ordering is ascending at n=" +
                          std::to_string(n) + " lambda=" + std::to_string(lambda));
}

BoundReport bound_chain(std::size_t n, double lambda, double /*eps*/) {
  if (n < 2) throw std::invalid_argument("bound_chain: n >= 2 required");
  const auto p = p_dist(n, lambda).dist;
  const auto q = q_dist(n, lambda).dist;
  const auto pu = p.sorted_ascending();
  const auto qu = q.sorted_ascending();

  BoundReport r;
  r.hp = shannon(p);
  r.hq = shannon(q);
  r.icoh = r.hp - r.hq;
  r.kl_sorted = kl_divergence(qu, pu);
  const double tv = total_variation(qu, pu);
  r.tv_term = tv * tv / (2.0 * std::log(2.0));
  const double linf = std::abs(qu[n + 1] - pu[n + 1]);
  r.linf_term = 2.0 / std::log(2.0) * linf * linf;
  r.k_gap = q[n + 1] - p[n - 1];
  r.certified = 2.0 / std::log(2.0) * r.k_gap * r.k_gap;
  return r;
}

double k_gap_floor(std::size_t n) {
  if (n < 3) throw std::invalid_argument("k_gap_floor: n >= 3 required");
  const double nd = static_cast<double>(n);
  return (nd + 1.0) * (nd - 2.0) / (4.0 * nd * (nd - 1.0)) *
         std::pow(1.0 - 1.0 / nd, nd);
}

bool elementwise_compare(std::size_t n, double lambda) {
  if (n < 4) throw std::invalid_argument("elementwise_compare: n >= 4 required");
  if (!(lambda >= 1.0 / (n + 1) - kSlack && lambda <= 1.0 / n + kSlack))
    throw std::invalid_argument("elementwise_compare: lambda outside [1/(n+1), 1/n]");
  const auto pu = p_dist(n, lambda).dist.sorted_ascending();
  const auto qu = q_dist(n, lambda).dist.sorted_ascending();
  for (std::size_t l = 0; l <= n; ++l)
    if (pu[l] < qu[l] - kSlack) return false;
  return pu[n + 1] <= qu[n + 1] + kSlack;
}

}  // namespace attenuant
