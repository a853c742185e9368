#pragma once

#include <cstddef>

#include "attenuant/entropy.hpp"

namespace attenuant {

/// One of the closed-form output distributions of the Fock-environment
/// transmission scheme, over the alphabet {0, .., n+1}.
struct SchemeDist {
  std::size_t n;
  double lambda;
  ProbDist dist;
};

/// Distribution of the reduced output state (diagonal in the Fock basis).
SchemeDist p_dist(std::size_t n, double lambda);
/// Spectrum of the joint output state.
SchemeDist q_dist(std::size_t n, double lambda);

/// True iff r is majorized by s: ascending partial sums of r dominate
/// those of s (1e-12 slack). Shorter input is zero-padded.
bool majorizes(const ProbDist& s, const ProbDist& r);

/// Interval endpoints used by the sorting certificates.
double lambda_plus(std::size_t n);
double lambda_minus(std::size_t n);
double lambda_plus_tilde(std::size_t n);

/// True iff q(n, lambda) is already ascending.
bool verify_q_sorted(std::size_t n, double lambda);

/// Which of the three candidate ascending orderings p follows:
///   1: (p_0..p_{n-3}, p_n, p_{n+1}, p_{n-2}, p_{n-1})
///   2: (p_0..p_{n-3}, p_n, p_{n-2}, p_{n+1}, p_{n-1})
///   3: (p_0..p_{n-3}, p_{n-2}, p_n, p_{n+1}, p_{n-1})
/// Throws consistency_error when none matches.
int verify_p_pattern(std::size_t n, double lambda);

/// Every line of the certified lower-bound chain, in bits.
struct BoundReport {
  double hp = 0, hq = 0;
  double icoh = 0;       // H(p) - H(q)
  double kl_sorted = 0;  // D(q^ || p^)
  double tv_term = 0;    // ||q^-p^||_1^2 / (2 ln 2)
  double linf_term = 0;  // (2/ln 2) |q^_{n+1} - p^_{n+1}|^2
  double k_gap = 0;      // q_{n+1} - p_{n-1}
  double certified = 0;  // (2/ln 2) k_gap^2
};

BoundReport bound_chain(std::size_t n, double lambda, double eps = 0.0);

/// (n+1)(n-2) / (4n(n-1)) * (1 - 1/n)^n; increasing in n >= 3, limit 1/(4e).
double k_gap_floor(std::size_t n);

/// Entrywise certificate for n >= 4: p^_l >= q^_l for l <= n and
/// p^_{n+1} <= q^_{n+1}.
bool elementwise_compare(std::size_t n, double lambda);

}  // namespace attenuant
