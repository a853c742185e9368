#include <algorithm>
#include <cmath>

#include "attenuant/entropy.hpp"
#include "attenuant/schemes.hpp"

namespace attenuant {

namespace {

/// Tight uniform-continuity penalty for the conditional entropy at trace
/// distance delta, with effective dimension |A| = 2:
///   2 delta log2|A| + (1 + delta) h2(delta / (1 + delta)).
double continuity_penalty(double delta) {
  if (delta <= 0.0) return 0.0;
  return 2.0 * delta + (1.0 + delta) * binary_entropy(delta / (1.0 + delta));
}

}  // namespace

double afw_certificate_at(double lambda) {
  const DensityMatrix base = zeta_ab_state(0.5, 1.0 / 3.0);
  const double icoh_half = coherent_info(base, {1});
  if (lambda == 0.5) return icoh_half;
  const double delta = trace_distance(zeta_ab_state(lambda, 1.0 / 3.0), base);
  return icoh_half - continuity_penalty(delta);
}

AfwInterval afw_interval(double c_target, double eps_resolution) {
  AfwInterval out;
  const double icoh_half = afw_certificate_at(0.5);
  if (c_target >= icoh_half || eps_resolution <= 0.0) return out;

  const auto cert = [&](double x) {
    return std::min(afw_certificate_at(0.5 - x), afw_certificate_at(0.5 + x));
  };

  double lo = 0.0, hi = 0.25;
  if (cert(hi) >= c_target) {
    lo = hi;
  } else {
    while (hi - lo > eps_resolution) {
      const double mid = 0.5 * (lo + hi);
      (cert(mid) >= c_target ? lo : hi) = mid;
    }
  }
  if (lo <= 0.0) return out;
  out.lo = 0.5 - lo;
  out.hi = 0.5 + lo;
  out.certified = cert(lo);
  out.empty = false;
  return out;
}

}  // namespace attenuant
