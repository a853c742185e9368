#include "attenuant/phase_space.hpp"

#include <cmath>
#include <stdexcept>

#include "attenuant/errors.hpp"

namespace attenuant {

namespace {

/// L_n^{(k)}(x) by the three-term recurrence in the degree.
double assoc_laguerre(std::size_t n, std::size_t k, double x) {
  double lm1 = 0.0, l = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double next =
        ((static_cast<double>(2 * i + 1 + k) - x) * l -
         (static_cast<double>(i + k)) * lm1) /
        static_cast<double>(i + 1);
    lm1 = l;
    l = next;
  }
  return l;
}

/// sqrt(n!/m!) alpha^{m-n} for m >= n, as a running product of alpha/sqrt(j).
cplx ratio_power(cplx alpha, std::size_t n, std::size_t m) {
  cplx r = 1.0;
  for (std::size_t j = n + 1; j <= m; ++j) r *= alpha / std::sqrt(double(j));
  return r;
}

}  // namespace

Operator displacement_matrix(cplx alpha, std::size_t cutoff) {
  if (cutoff < 1) throw std::invalid_argument("displacement_matrix: cutoff >= 1");
  const double x = std::norm(alpha);
  const double gauss = std::exp(-0.5 * x);
  CMat d(cutoff, cutoff);
  for (std::size_t n = 0; n < cutoff; ++n) {
    for (std::size_t m = n; m < cutoff; ++m)
      d(m, n) = ratio_power(alpha, n, m) * gauss * assoc_laguerre(n, m - n, x);
    for (std::size_t m = 0; m < n; ++m)
      d(m, n) = std::conj(ratio_power(-alpha, m, n) * gauss *
                          assoc_laguerre(m, n - m, x));
  }
  return Operator{ModeDims({cutoff}), std::move(d)};
}

cplx char_fn(const DensityMatrix& rho, cplx alpha) {
  if (rho.dims.mode_count() != 1)
    throw std::invalid_argument("char_fn: single-mode state required");
  const Operator d = displacement_matrix(alpha, rho.dims.dims[0]);
  return trace(matmul(rho.mat, d.mat));
}

std::size_t displacement_margin_block(std::size_t cutoff, double alpha_abs) {
  const double margin =
      std::ceil(2.0 * alpha_abs * std::sqrt(static_cast<double>(cutoff))) + 7.0;
  if (margin >= static_cast<double>(cutoff)) return 0;
  return cutoff - static_cast<std::size_t>(margin);
}

DensityMatrix displace(const DensityMatrix& rho, cplx z) {
  if (rho.dims.mode_count() != 1)
    throw std::invalid_argument("displace: single-mode state required");
  const Operator d = displacement_matrix(z, rho.dims.dims[0]);
  return DensityMatrix{rho.dims, conjugate_by(d.mat, rho.mat)};
}

double verify_covariance(double lambda, const DensityMatrix& sigma, cplx z,
                         const DensityMatrix& probe, std::size_t work_cutoff,
                         std::size_t env_cutoff) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("verify_covariance: lambda in [0, 1]");
  if (probe.dims.mode_count() != 1 || sigma.dims.mode_count() != 1)
    throw std::invalid_argument("verify_covariance: single-mode states required");
  if (work_cutoff < probe.dims.dims[0] || env_cutoff < sigma.dims.dims[0])
    throw std::invalid_argument("verify_covariance: cutoffs below state support");

  const double sl = std::sqrt(lambda), slc = std::sqrt(1.0 - lambda);
  const auto budget = [](const DensityMatrix& r, const char* what) {
    if (top_level_mass(r, 0, 2) > 1e-8)
      throw truncation_error(std::string("verify_covariance: ") + what +
                             " spills past the cutoff");
  };

  // Identity 1 on the probe cutoff.
  const DensityMatrix rho_w = embed(probe, ModeDims({work_cutoff}));
  const DensityMatrix rho_disp = displace(rho_w, z);
  budget(rho_disp, "displaced probe");
  const ChannelSpec spec{lambda, sigma, 0.0};
  const DensityMatrix lhs1 = apply(spec, rho_disp);
  const DensityMatrix rhs1 = displace(apply(spec, rho_w), sl * z);
  double worst = max_abs_diff(lhs1.mat, rhs1.mat);

  // Identity 2 on the environment cutoff.
  const DensityMatrix sig_w = embed(sigma, ModeDims({env_cutoff}));
  const DensityMatrix sig_disp = displace(sig_w, z);
  budget(sig_disp, "displaced environment");
  const DensityMatrix lhs2 = apply(ChannelSpec{lambda, sig_disp, 0.0}, rho_w);
  const DensityMatrix rhs2 =
      displace(apply(ChannelSpec{lambda, sig_w, 0.0}, rho_w), slc * z);
  worst = std::max(worst, max_abs_diff(lhs2.mat, rhs2.mat));
  return worst;
}

}  // namespace attenuant
