#pragma once

#include <cstddef>
#include <vector>

#include "attenuant/fock.hpp"

namespace attenuant {

/// General attenuator: mix the input with a fixed single-mode environment
/// state on a beam splitter of transmissivity lambda, trace the environment.
struct ChannelSpec {
  double lambda = 1.0;
  DensityMatrix env;
  double env_tail = 0.0;  // mass discarded when the environment was truncated

  /// Output cutoff for a given input cutoff (exact, photon conserving).
  std::size_t out_cutoff(std::size_t in_cutoff) const {
    return in_cutoff + env.dims.dims[0] - 1;
  }
};

ChannelSpec pure_loss(double lambda);
/// cutoff == 0 picks the smallest cutoff with thermal tail mass < 1e-12.
ChannelSpec thermal_attenuator(double lambda, double nu, std::size_t cutoff = 0);
ChannelSpec fock_environment(double lambda, std::size_t n);

/// Tr_E[ U (rho (x) env) U^dag ] for a single-mode input.
DensityMatrix apply(const ChannelSpec& spec, const DensityMatrix& rho);

/// Identity on the spectator modes, channel on acted_mode.
DensityMatrix apply_bipartite(const ChannelSpec& spec, const DensityMatrix& rho,
                              std::size_t acted_mode);

/// Tr_B instead of Tr_E: the state handed to the environment.
DensityMatrix weak_complementary(const ChannelSpec& spec,
                                 const DensityMatrix& rho);

/// Max entrywise residual between Phi_{lambda,sigma} o Phi_{mu,omega} and
/// the single equivalent attenuator Phi_{lambda mu, tau}, over a probe set.
double compose_check(double lambda, const DensityMatrix& sigma, double mu,
                     const DensityMatrix& omega,
                     const std::vector<DensityMatrix>& probes = {});

std::vector<DensityMatrix> default_probes(std::size_t cutoff = 3);

/// Cascade of beam splitters with a joint k-mode environment.
struct CascadeSpec {
  std::vector<double> lambdas;
  DensityMatrix joint_env;
};

/// eta_i = lambda_i (1 - lambda_1..lambda_{i-1}) / (1 - lambda_1..lambda_i)
/// for i = 2..k, with the analytic-limit guard near lambda_1..lambda_i = 1.
std::vector<double> eta_chain(const std::vector<double>& lambdas);

/// Joint environment that makes the cascade equal to Phi_{prod lambda, sigma}.
DensityMatrix build_omega(const DensityMatrix& sigma,
                          const std::vector<double>& lambdas);

DensityMatrix cascade_apply(const CascadeSpec& spec, const DensityMatrix& rho);

}  // namespace attenuant
