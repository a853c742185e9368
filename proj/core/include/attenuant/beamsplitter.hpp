#pragma once

#include <cstddef>
#include <vector>

#include "attenuant/fock.hpp"

namespace attenuant {

/// Beam splitter unitary restricted to the span of {|l>|N-l>}. The
/// generator is real antisymmetric in this basis, so the block is a real
/// orthogonal matrix.
struct BlockUnitary {
  std::size_t total_photons = 0;
  std::vector<double> m;  // (N+1)x(N+1), row-major

  std::size_t side() const { return total_photons + 1; }
  double at(std::size_t i, std::size_t j) const { return m[i * side() + j]; }
};

/// exp(arccos(sqrt(lambda)) (a^dag b - a b^dag)) on the N-photon block,
/// via eigendecomposition of i*(generator).
BlockUnitary bs_block(std::size_t N, double lambda);

/// Closed-form coefficient of |l>|n-l> in U_lambda |0>|n>.
double coeff_0n(std::size_t n, double lambda, std::size_t l);
/// Closed-form coefficient of |l>|n+1-l> in U_lambda |1>|n>.
double coeff_1n(std::size_t n, double lambda, std::size_t l);

/// Applies the beam splitter to a two-mode pure state. Output cutoffs are
/// exact: both modes get d1 + d2 - 1 levels, so no amplitude is clipped.
StateVector bs_apply(const StateVector& psi, double lambda);

/// Same, on modes (i, j) of a multimode state; inverse applies U^dag.
StateVector bs_apply_modes(const StateVector& psi, std::size_t i, std::size_t j,
                           double lambda, bool inverse = false);

/// U (.) U^dag on modes (i, j) of a density matrix, block by block in the
/// total photon number. Output cutoffs grow exactly as for bs_apply.
DensityMatrix bs_conjugate_modes(const DensityMatrix& rho, std::size_t i,
                                 std::size_t j, double lambda,
                                 bool inverse = false);

}  // namespace attenuant
