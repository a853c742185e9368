#pragma once

#include <cstddef>

#include "attenuant/attenuator.hpp"
#include "attenuant/fock.hpp"

namespace attenuant {

/// Matrix elements <m|D(alpha)|n> of the displacement operator on a
/// truncated single-mode space, from the closed associated-Laguerre form.
/// The elements themselves are exact; only products and traces involving
/// levels near the cutoff feel the truncation.
Operator displacement_matrix(cplx alpha, std::size_t cutoff);

/// chi_rho(alpha) = Tr[rho D(alpha)], single-mode rho.
cplx char_fn(const DensityMatrix& rho, cplx alpha);

/// Side of the leading block of a cutoff-sized displacement product that is
/// trusted to 1e-8 (measured; grows like cutoff - 2|alpha| sqrt(cutoff)).
std::size_t displacement_margin_block(std::size_t cutoff, double alpha_abs);

/// D(z) rho D(z)^dag at rho's own cutoff.
DensityMatrix displace(const DensityMatrix& rho, cplx z);

/// Max entrywise residual of the two displacement covariance identities
///   Phi_{l,s} o D_z               = D_{sqrt(l) z} o Phi_{l,s}
///   Phi_{l, D_z s}                = D_{sqrt(1-l) z} o Phi_{l,s}
/// evaluated on a working cutoff. Throws truncation_error when the
/// displaced states spill past the cutoff (top-level mass > 1e-8).
double verify_covariance(double lambda, const DensityMatrix& sigma, cplx z,
                         const DensityMatrix& probe,
                         std::size_t work_cutoff = 30,
                         std::size_t env_cutoff = 24);

}  // namespace attenuant
