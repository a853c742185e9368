#include "attenuant/attenuator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "attenuant/beamsplitter.hpp"

namespace attenuant {

namespace {

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("attenuator: lambda must be in [0, 1]");
}

void check_single_mode_env(const ChannelSpec& spec) {
  if (spec.env.dims.mode_count() != 1)
    throw std::invalid_argument("attenuator: single-mode environment required");
}

/// Spectral decomposition with eigenvalues below 1e-15 dropped.
std::vector<std::pair<double, StateVector>> pure_parts(const DensityMatrix& rho) {
  const EigH e = eig_hermitian(rho.mat);
  std::vector<std::pair<double, StateVector>> parts;
  for (std::size_t k = 0; k < e.values.size(); ++k) {
    if (e.values[k] <= 1e-15) continue;
    std::vector<cplx> amps(rho.dims.total());
    for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = e.vectors(i, k);
    parts.emplace_back(e.values[k], StateVector{rho.dims, std::move(amps)});
  }
  return parts;
}

}  // namespace

ChannelSpec pure_loss(double lambda) {
  check_lambda(lambda);
  return ChannelSpec{lambda, projector(fock_state(ModeDims({1}), {0})), 0.0};
}

ChannelSpec thermal_attenuator(double lambda, double nu, std::size_t cutoff) {
  check_lambda(lambda);
  if (nu < 0.0) throw std::invalid_argument("thermal_attenuator: nu must be >= 0");
  if (cutoff == 0) cutoff = thermal_cutoff(nu, 1e-12);
  const double tail =
      nu == 0.0 ? 0.0 : std::pow(nu / (nu + 1.0), static_cast<double>(cutoff));
  return ChannelSpec{lambda, thermal_state(nu, cutoff), tail};
}

ChannelSpec fock_environment(double lambda, std::size_t n) {
  check_lambda(lambda);
  return ChannelSpec{lambda, projector(fock_state(ModeDims({n + 1}), {n})), 0.0};
}

DensityMatrix apply(const ChannelSpec& spec, const DensityMatrix& rho) {
  check_single_mode_env(spec);
  if (rho.dims.mode_count() != 1)
    throw std::invalid_argument("apply: single-mode input required");
  const DensityMatrix joint = tensor(rho, spec.env);
  const DensityMatrix mixed = bs_conjugate_modes(joint, 0, 1, spec.lambda);
  return partial_trace(mixed, {0});
}

DensityMatrix apply_bipartite(const ChannelSpec& spec, const DensityMatrix& rho,
                              std::size_t acted_mode) {
  check_single_mode_env(spec);
  if (acted_mode >= rho.dims.mode_count())
    throw std::invalid_argument("apply_bipartite: acted mode out of range");
  const DensityMatrix joint = tensor(rho, spec.env);
  const std::size_t env_mode = rho.dims.mode_count();
  const DensityMatrix mixed =
      bs_conjugate_modes(joint, acted_mode, env_mode, spec.lambda);
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < env_mode; ++k) keep.push_back(k);
  return partial_trace(mixed, keep);
}

DensityMatrix weak_complementary(const ChannelSpec& spec,
                                 const DensityMatrix& rho) {
  check_single_mode_env(spec);
  if (rho.dims.mode_count() != 1)
    throw std::invalid_argument("weak_complementary: single-mode input required");
  const DensityMatrix joint = tensor(rho, spec.env);
  const DensityMatrix mixed = bs_conjugate_modes(joint, 0, 1, spec.lambda);
  return partial_trace(mixed, {1});
}

std::vector<DensityMatrix> default_probes(std::size_t cutoff) {
  const ModeDims d({cutoff});
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<DensityMatrix> probes;
  probes.push_back(projector(fock_state(d, {0})));
  probes.push_back(projector(fock_state(d, {1})));
  std::vector<cplx> plus(cutoff);
  plus[0] = r;
  plus[1] = r;
  probes.push_back(projector(make_state(d, plus)));
  if (cutoff >= 3) {
    std::vector<cplx> ci(cutoff);
    ci[0] = r;
    ci[2] = cplx(0.0, r);
    probes.push_back(projector(make_state(d, ci)));
    DensityMatrix mixed{d, CMat(cutoff, cutoff)};
    mixed.mat(0, 0) = 0.5;
    mixed.mat(2, 2) = 0.5;
    probes.push_back(mixed);
  }
  return probes;
}

double compose_check(double lambda, const DensityMatrix& sigma, double mu,
                     const DensityMatrix& omega,
                     const std::vector<DensityMatrix>& probes) {
  if (!(lambda > 0.0 && lambda < 1.0 && mu > 0.0 && mu < 1.0))
    throw std::invalid_argument("compose_check: lambda, mu must be in (0, 1)");
  if (1.0 - lambda * mu < 1e-14)
    throw std::invalid_argument("compose_check: lambda*mu too close to 1");

  const ChannelSpec outer{lambda, sigma, 0.0};
  const ChannelSpec inner{mu, omega, 0.0};
  const double eta = lambda * (1.0 - mu) / (1.0 - lambda * mu);
  const DensityMatrix tau = apply(ChannelSpec{eta, sigma, 0.0}, omega);
  const ChannelSpec fused{lambda * mu, tau, 0.0};

  const auto& set = probes.empty() ? default_probes() : probes;
  double worst = 0.0;
  for (const auto& rho : set) {
    const DensityMatrix lhs = apply(outer, apply(inner, rho));
    const DensityMatrix rhs = apply(fused, rho);
    worst = std::max(worst, max_abs_diff(lhs.mat, rhs.mat));
  }
  return worst;
}

std::vector<double> eta_chain(const std::vector<double>& lambdas) {
  if (lambdas.size() < 2)
    throw std::invalid_argument("eta_chain: need at least two transmissivities");
  double prod = 1.0;
  for (double l : lambdas) {
    check_lambda(l);
    prod *= l;
  }
  if (prod <= 0.0)
    throw std::invalid_argument("eta_chain: product of transmissivities is 0");

  std::vector<double> etas;
  double prefix = lambdas[0];
  for (std::size_t i = 1; i < lambdas.size(); ++i) {
    const double denom = 1.0 - prefix * lambdas[i];
    // prefix*lambda_i -> 1 forces lambda_i -> 1; the limit is eta_i = lambda_i.
    etas.push_back(std::abs(denom) < 1e-14
                       ? lambdas[i]
                       : lambdas[i] * (1.0 - prefix) / denom);
    prefix *= lambdas[i];
  }
  return etas;
}

DensityMatrix build_omega(const DensityMatrix& sigma,
                          const std::vector<double>& lambdas) {
  if (sigma.dims.mode_count() != 1)
    throw std::invalid_argument("build_omega: single-mode sigma required");
  const std::size_t k = lambdas.size();
  const auto etas = eta_chain(lambdas);

  // Omega = U_{eta_2}^dag ... U_{eta_k}^dag (sigma (x) |0..0>) U_{eta_k} ... U_{eta_2},
  // assembled from the pure parts of sigma.
  const auto parts = pure_parts(sigma);
  DensityMatrix out;
  bool first = true;
  for (const auto& [w, v] : parts) {
    std::vector<std::size_t> d{v.dims.dims[0]};
    std::vector<cplx> amps = v.amps;
    for (std::size_t i = 1; i < k; ++i) d.push_back(1);
    StateVector psi{ModeDims(d), std::move(amps)};
    // U_{eta_j}^dag pairs B_1 with B_j; rightmost factor (j = k) acts first.
    for (std::size_t j = k; j >= 2; --j)
      psi = bs_apply_modes(psi, 0, j - 1, etas[j - 2], /*inverse=*/true);
    DensityMatrix term = projector(psi);
    term.mat *= cplx(w, 0.0);
    if (first) {
      out = std::move(term);
      first = false;
    } else {
      out.mat += term.mat;
    }
  }
  return out;
}

DensityMatrix cascade_apply(const CascadeSpec& spec, const DensityMatrix& rho) {
  const std::size_t k = spec.lambdas.size();
  if (k < 2) throw std::invalid_argument("cascade_apply: need k >= 2 splitters");
  if (spec.joint_env.dims.mode_count() != k)
    throw std::invalid_argument("cascade_apply: environment must have k modes");
  if (rho.dims.mode_count() != 1)
    throw std::invalid_argument("cascade_apply: single-mode input required");
  for (double l : spec.lambdas) check_lambda(l);

  const auto rho_parts = pure_parts(rho);
  const auto env_parts = pure_parts(spec.joint_env);

  DensityMatrix out;
  bool first = true;
  for (const auto& [wr, vr] : rho_parts) {
    for (const auto& [we, ve] : env_parts) {
      StateVector psi = tensor(vr, ve);  // modes: A, B_1..B_k
      for (std::size_t i = 0; i < k; ++i)
        psi = bs_apply_modes(psi, 0, i + 1, spec.lambdas[i]);
      // Reduce onto A: with mode 0 slowest, rho_A = M M^dag for the
      // (d_A x rest) reshape of the amplitudes.
      const std::size_t da = psi.dims.dims[0];
      const std::size_t rest = psi.dims.total() / da;
      CMat red(da, da);
      for (std::size_t a = 0; a < da; ++a)
        for (std::size_t b = 0; b < da; ++b) {
          cplx s = 0.0;
          for (std::size_t r = 0; r < rest; ++r)
            s += psi.amps[a * rest + r] * std::conj(psi.amps[b * rest + r]);
          red(a, b) = s;
        }
      red *= cplx(wr * we, 0.0);
      if (first) {
        out = DensityMatrix{ModeDims({da}), std::move(red)};
        first = false;
      } else if (out.dims.dims[0] == da) {
        out.mat += red;
      } else {
        // Pure parts can differ in support; align on the larger cutoff.
        const std::size_t dmax = std::max(out.dims.dims[0], da);
        out = embed(out, ModeDims({dmax}));
        DensityMatrix t = embed(DensityMatrix{ModeDims({da}), std::move(red)},
                                ModeDims({dmax}));
        out.mat += t.mat;
      }
    }
  }
  return out;
}

}  // namespace attenuant
