#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "attenuant/fock.hpp"

namespace attenuant {

/// Normalized nonnegative weights. Entries in [-1e-14, 0) are clamped to
/// zero; the sum must be 1 within 1e-12. All entropies are in bits.
class ProbDist {
 public:
  explicit ProbDist(std::vector<double> w);

  const std::vector<double>& weights() const { return w_; }
  std::size_t size() const { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }

  ProbDist sorted_ascending() const;

 private:
  std::vector<double> w_;
};

double shannon(const ProbDist& p);
/// +infinity when supp(u) is not contained in supp(v); never silent.
double kl_divergence(const ProbDist& u, const ProbDist& v);
/// sum_l |u_l - v_l| (the unnormalized L1 convention).
double total_variation(const ProbDist& u, const ProbDist& v);

/// Eigenvalues of a Hermitian matrix, ascending. Throws when the
/// Hermiticity defect exceeds 1e-8.
std::vector<double> hermitian_eigs(const CMat& mat);

/// Von Neumann entropy in bits; eigenvalues in [-1e-10, 0) are clamped to
/// zero and the spectrum renormalized.
double vn_entropy(const DensityMatrix& rho);
double spectrum_entropy(std::vector<double> eigs);

/// I_coh(A>B) = S(B) - S(AB), with B the listed modes of rho.
double coherent_info(const DensityMatrix& rho,
                     const std::vector<std::size_t>& b_modes);

/// Bosonic entropy g(x) = (x+1) log2(x+1) - x log2 x, g(0) = 0.
double g(double x);
/// Monotone inverse, bisected to 1e-12.
double g_inverse(double y);

double binary_entropy(double x);

/// max{ g(lambda N) - g((1-lambda) N), 0 }.
double pure_loss_capacity(double lambda, double N);
/// m g(N/m): energy-constrained capacity of any m-mode channel is below this.
double universal_cap_upper(std::size_t m, double N);
/// (lower, upper) capacity bounds for a general attenuator with a
/// single-mode environment of mean photon number nu_sigma and entropy
/// S_sigma. The lower bound is non-positive whenever lambda <= 1/2.
std::pair<double, double> lim_bounds(double lambda, double N, double nu_sigma,
                                     double S_sigma);
/// max{ (1-2 lambda) log2 d, 0 }.
double depolarizing_upper(double lambda, std::size_t d);

double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Continuity certificate around lambda = 1/2 for the xi(1/3) scheme:
/// the coherent information at 1/2 minus the tight conditional-entropy
/// continuity penalty (effective dimension |A| = 2) at trace distance
/// delta(lambda).
double afw_certificate_at(double lambda);

struct AfwInterval {
  double lo = 0.5, hi = 0.5;
  double certified = 0.0;
  bool empty = true;
};

/// Widest symmetric interval around 1/2 whose endpoint certificate stays
/// >= c_target, located by bisection to eps_resolution.
AfwInterval afw_interval(double c_target, double eps_resolution = 1e-6);

}  // namespace attenuant
