#include "attenuant/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "attenuant/errors.hpp"

namespace attenuant {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

ProbDist::ProbDist(std::vector<double> w) : w_(std::move(w)) {
  double sum = 0.0;
  for (double& x : w_) {
    if (x < 0.0) {
      if (x < -1e-14) throw std::invalid_argument("ProbDist: negative weight");
      x = 0.0;
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("ProbDist: weights do not sum to 1");
}

ProbDist ProbDist::sorted_ascending() const {
  std::vector<double> s = w_;
  std::stable_sort(s.begin(), s.end());
  return ProbDist(std::move(s));
}

double shannon(const ProbDist& p) {
  double h = 0.0;
  for (double x : p.weights()) h -= xlog2x(x);
  return h;
}

double kl_divergence(const ProbDist& u, const ProbDist& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("kl_divergence: size mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0.0) continue;
    if (v[i] == 0.0) return std::numeric_limits<double>::infinity();
    d += u[i] * std::log2(u[i] / v[i]);
  }
  return d;
}

double total_variation(const ProbDist& u, const ProbDist& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("total_variation: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::abs(u[i] - v[i]);
  return s;
}

std::vector<double> hermitian_eigs(const CMat& mat) {
  if (hermiticity_defect(mat) > 1e-8)
    throw consistency_error("hermitian_eigs: matrix is not Hermitian");
  return eigvals_hermitian(mat);
}

double spectrum_entropy(std::vector<double> eigs) {
  double sum = 0.0;
  for (double& x : eigs) {
    if (x < 0.0) {
      if (x < -1e-10)
        throw consistency_error("spectrum_entropy: eigenvalue below -1e-10");
      x = 0.0;
    }
    sum += x;
  }
  if (sum <= 0.0) throw consistency_error("spectrum_entropy: zero spectrum");
  double h = 0.0;
  for (double x : eigs) h -= xlog2x(x / sum);
  return h;
}

double vn_entropy(const DensityMatrix& rho) {
  return spectrum_entropy(hermitian_eigs(rho.mat));
}

double coherent_info(const DensityMatrix& rho,
                     const std::vector<std::size_t>& b_modes) {
  const DensityMatrix rho_b = partial_trace(rho, b_modes);
  return vn_entropy(rho_b) - vn_entropy(rho);
}

double g(double x) {
  if (x < 0.0) throw std::invalid_argument("g: x must be >= 0");
  if (x == 0.0) return 0.0;
  return (x + 1.0) * std::log2(x + 1.0) - x * std::log2(x);
}

double g_inverse(double y) {
  if (y < 0.0) throw std::invalid_argument("g_inverse: y must be >= 0");
  if (y == 0.0) return 0.0;
  double lo = 0.0, hi = 1.0;
  while (g(hi) < y) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < y ? lo : hi) = mid;
    if (hi - lo <= 1e-12 * std::max(1.0, hi)) break;
  }
  return 0.5 * (lo + hi);
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -xlog2x(x) - xlog2x(1.0 - x);
}

double pure_loss_capacity(double lambda, double N) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("pure_loss_capacity: lambda in [0, 1]");
  if (N < 0.0) throw std::invalid_argument("pure_loss_capacity: N >= 0");
  return std::max(g(lambda * N) - g((1.0 - lambda) * N), 0.0);
}

double universal_cap_upper(std::size_t m, double N) {
  if (m == 0) throw std::invalid_argument("universal_cap_upper: m >= 1");
  return static_cast<double>(m) * g(N / static_cast<double>(m));
}

std::pair<double, double> lim_bounds(double lambda, double N, double nu_sigma,
                                     double S_sigma) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("lim_bounds: lambda in [0, 1]");
  if (N < 0.0 || nu_sigma < 0.0 || S_sigma < 0.0)
    throw std::invalid_argument("lim_bounds: negative parameter");
  const double lower = g((1.0 - lambda) * g_inverse(S_sigma) + lambda * N) -
                       S_sigma - g(lambda * nu_sigma + (1.0 - lambda) * N);
  const double upper = g(lambda * N + (1.0 - lambda) * nu_sigma) -
                       std::log(lambda + (1.0 - lambda) * std::exp(S_sigma));
  return {lower, upper};
}

double depolarizing_upper(double lambda, std::size_t d) {
  if (d < 2) throw std::invalid_argument("depolarizing_upper: d >= 2");
  return std::max((1.0 - 2.0 * lambda) * std::log2(static_cast<double>(d)), 0.0);
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (!(a.dims == b.dims))
    throw std::invalid_argument("trace_distance: dimension mismatch");
  CMat diff = a.mat;
  diff -= b.mat;
  double s = 0.0;
  for (double ev : eigvals_hermitian(diff)) s += std::abs(ev);
  return 0.5 * s;
}

// The xi(1/3) continuity certificate lives in afw.cpp: it builds scheme
// states, which this translation unit must not depend on.

}  // namespace attenuant
