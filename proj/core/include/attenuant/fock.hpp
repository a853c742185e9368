#pragma once

#include <cstddef>
#include <vector>

#include "attenuant/linalg.hpp"

namespace attenuant {

/// Per-mode Fock cutoffs: mode j holds levels 0 .. dims[j]-1. The basis
/// index runs row-major over occupation tuples (mode 0 slowest).
struct ModeDims {
  std::vector<std::size_t> dims;

  ModeDims() = default;
  explicit ModeDims(std::vector<std::size_t> d);

  std::size_t mode_count() const { return dims.size(); }
  std::size_t total() const;
  std::vector<std::size_t> strides() const;

  std::size_t index_of(const std::vector<std::size_t>& occ) const;
  std::vector<std::size_t> occupation_of(std::size_t index) const;
  std::size_t occupation_sum(std::size_t index) const;

  bool operator==(const ModeDims& o) const { return dims == o.dims; }
};

struct StateVector {
  ModeDims dims;
  std::vector<cplx> amps;

  double norm() const;
};

struct DensityMatrix {
  ModeDims dims;
  CMat mat;
};

struct Operator {
  ModeDims dims;
  CMat mat;
};

/// Builds a state and checks |norm - 1| <= 1e-12 (or renormalizes).
StateVector make_state(ModeDims dims, std::vector<cplx> amps,
                       bool renormalize = false);
StateVector fock_state(const ModeDims& dims, const std::vector<std::size_t>& occ);
DensityMatrix projector(const StateVector& psi);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
StateVector tensor(const StateVector& a, const StateVector& b);

/// Reduced state on the kept modes (ascending mode order in the result).
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::size_t>& keep);

Operator number_operator(const ModeDims& dims);
double mean_photon(const DensityMatrix& rho);
double mean_photon(const StateVector& psi);

/// Geometric (thermal) state with mean photon number nu, renormalized on
/// the given cutoff. Caller picks the cutoff; thermal_cutoff() gives the
/// smallest one with tail mass below `tail`.
DensityMatrix thermal_state(double nu, std::size_t cutoff);
std::size_t thermal_cutoff(double nu, double tail = 1e-12);

/// V rho V^dag with V = (-1)^{total photon number}.
DensityMatrix parity_conjugate(const DensityMatrix& rho);
StateVector parity_conjugate(const StateVector& psi);

DensityMatrix partial_transpose(const DensityMatrix& rho, std::size_t mode);

/// Zero-padded copy with enlarged per-mode cutoffs.
DensityMatrix embed(const DensityMatrix& rho, const ModeDims& target);
StateVector embed(const StateVector& psi, const ModeDims& target);

/// Population of the top `levels` Fock levels of one mode.
double top_level_mass(const DensityMatrix& rho, std::size_t mode,
                      std::size_t levels);

struct DensityCheck {
  double hermiticity;
  double trace_defect;
  double min_eig;  // only meaningful when PSD was checked
  bool ok;
};

/// Hermiticity within 1e-12, unit trace within 1e-12, and (optionally)
/// min eigenvalue >= -1e-10.
DensityCheck check_density(const DensityMatrix& rho, bool check_psd = false);

}  // namespace attenuant
