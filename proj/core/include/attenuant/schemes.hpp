#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "attenuant/fock.hpp"

namespace attenuant {

struct SchemeResult {
  std::string scheme_id;
  double eta = 0.0;
  double lambda = 0.0;
  std::size_t n = 0;
  double icoh = 0.0;    // bits
  double energy = 0.0;  // input mean photon number on B
  std::size_t cutoff = 0;
  double cross_check_residual = 0.0;
  bool degenerate = false;
};

/// Two-level environment sqrt(eta)|0> - sqrt(1-eta)|1> probed with the
/// qubit-qutrit ansatz; exact on a (2,3) output support.
SchemeResult scheme1_icoh(double eta, double lambda);

/// Maximum of scheme1 over eta at lambda = 1/2: a uniform grid plus
/// golden-section refinement around the best point. Returns (eta*, icoh*).
std::pair<double, double> scheme1_max_over_eta(std::size_t grid = 2001);

/// Fock-pair environment scheme at lambda = 1/2 with input energy n - 3/2.
/// `pad` adds headroom to the exact cutoffs (for stability checks).
SchemeResult scheme2_icoh(std::size_t n, std::size_t pad = 0);

/// H(p(n,lambda)) - H(q(n,lambda)); for n <= 6 the value is also recomputed
/// by full Fock simulation and the two must agree to 1e-9.
SchemeResult main_scheme_icoh(std::size_t n, double lambda);

struct SigmaChoice {
  enum class Branch { vacuum, xi_one_third, fock };
  Branch branch = Branch::vacuum;
  std::size_t n = 0;  // Fock level when branch == fock
  double eps = 0.0;
};

/// Environment selector: vacuum above 1/2+eps, the xi(1/3) superposition
/// around 1/2, Fock |2> down to 1/3, Fock |n> on [1/(n+1), 1/n] below.
/// Boundary ties go to the branch covering the smaller lambda.
SigmaChoice sigma_selector(double lambda, double eps);
DensityMatrix sigma_state(const SigmaChoice& choice);

struct FloorResult {
  double value = 0.0;
  SigmaChoice choice;
  std::string method;
};

/// Certified lower bound on Q(Phi_{lambda, sigma(lambda)}, 1/2) using the
/// branch-appropriate argument. Throws consistency_error when a branch
/// fails to produce a positive certificate.
FloorResult capacity_floor(double lambda, double eps);

/// Minimum eigenvalue of the partial transpose of the Bell-pair output of
/// a pure loss channel; negative means entangled.
double ppt_check(double lambda);

/// (I (x) Phi_{lambda, xi(eta)}) applied to the qubit-qutrit ansatz.
DensityMatrix zeta_ab_state(double lambda, double eta);
/// Closed forms at lambda = 1/2.
DensityMatrix zeta_ab_closed_form(double eta);
DensityMatrix zeta_b_closed_form(double eta);

struct FigureRow {
  std::string curve;
  double x;
  double y;
};

/// figure_id in {icoh_main, icoh_xi, icoh_xi_prime}. `ns` selects the
/// curves for icoh_main and the n range for icoh_xi_prime.
std::vector<FigureRow> figure_data(const std::string& figure_id,
                                   const std::vector<std::size_t>& ns,
                                   std::size_t resolution);

}  // namespace attenuant
