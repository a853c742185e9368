#include "attenuant/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace attenuant {

ModeDims::ModeDims(std::vector<std::size_t> d) : dims(std::move(d)) {
  if (dims.empty()) throw std::invalid_argument("ModeDims: no modes");
  for (std::size_t c : dims)
    if (c < 1) throw std::invalid_argument("ModeDims: cutoff must be >= 1");
}

std::size_t ModeDims::total() const {
  std::size_t t = 1;
  for (std::size_t c : dims) t *= c;
  return t;
}

std::vector<std::size_t> ModeDims::strides() const {
  std::vector<std::size_t> s(dims.size());
  std::size_t acc = 1;
  for (std::size_t k = dims.size(); k-- > 0;) {
    s[k] = acc;
    acc *= dims[k];
  }
  return s;
}

std::size_t ModeDims::index_of(const std::vector<std::size_t>& occ) const {
  if (occ.size() != dims.size())
    throw std::invalid_argument("index_of: wrong mode count");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (occ[k] >= dims[k]) throw std::invalid_argument("index_of: level out of range");
    idx = idx * dims[k] + occ[k];
  }
  return idx;
}

std::vector<std::size_t> ModeDims::occupation_of(std::size_t index) const {
  std::vector<std::size_t> occ(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    occ[k] = index % dims[k];
    index /= dims[k];
  }
  return occ;
}

std::size_t ModeDims::occupation_sum(std::size_t index) const {
  std::size_t s = 0;
  for (std::size_t k = dims.size(); k-- > 0;) {
    s += index % dims[k];
    index /= dims[k];
  }
  return s;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const cplx& a : amps) s += std::norm(a);
  return std::sqrt(s);
}

StateVector make_state(ModeDims dims, std::vector<cplx> amps, bool renormalize) {
  if (amps.size() != dims.total())
    throw std::invalid_argument("make_state: amplitude count mismatch");
  StateVector psi{std::move(dims), std::move(amps)};
  const double n = psi.norm();
  if (renormalize) {
    if (n == 0.0) throw std::invalid_argument("make_state: zero vector");
    for (auto& a : psi.amps) a /= n;
  } else if (std::abs(n - 1.0) > 1e-12) {
    throw std::invalid_argument("make_state: state not normalized");
  }
  return psi;
}

StateVector fock_state(const ModeDims& dims, const std::vector<std::size_t>& occ) {
  StateVector psi{dims, std::vector<cplx>(dims.total())};
  psi.amps[dims.index_of(occ)] = 1.0;
  return psi;
}

DensityMatrix projector(const StateVector& psi) {
  const std::size_t d = psi.amps.size();
  CMat m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (psi.amps[i] == cplx{}) continue;
    for (std::size_t j = 0; j < d; ++j)
      m(i, j) = psi.amps[i] * std::conj(psi.amps[j]);
  }
  return DensityMatrix{psi.dims, std::move(m)};
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<std::size_t> d = a.dims.dims;
  d.insert(d.end(), b.dims.dims.begin(), b.dims.dims.end());
  return DensityMatrix{ModeDims(std::move(d)), kron(a.mat, b.mat)};
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  std::vector<std::size_t> d = a.dims.dims;
  d.insert(d.end(), b.dims.dims.begin(), b.dims.dims.end());
  std::vector<cplx> amps(a.amps.size() * b.amps.size());
  for (std::size_t i = 0; i < a.amps.size(); ++i)
    for (std::size_t j = 0; j < b.amps.size(); ++j)
      amps[i * b.amps.size() + j] = a.amps[i] * b.amps[j];
  return StateVector{ModeDims(std::move(d)), std::move(amps)};
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::size_t>& keep) {
  const std::size_t m = rho.dims.mode_count();
  std::vector<std::size_t> k = keep;
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  if (k.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  for (std::size_t mode : k)
    if (mode >= m) throw std::invalid_argument("partial_trace: mode out of range");

  const auto strides = rho.dims.strides();
  std::vector<std::size_t> traced;
  for (std::size_t mode = 0; mode < m; ++mode)
    if (!std::binary_search(k.begin(), k.end(), mode)) traced.push_back(mode);

  // Any subset of modes contributes additively to the flat index, so kept
  // and traced sub-indices enumerate as independent offset lists.
  auto offsets = [&](const std::vector<std::size_t>& modes) {
    std::vector<std::size_t> off{0};
    for (std::size_t mode : modes) {
      std::vector<std::size_t> next;
      next.reserve(off.size() * rho.dims.dims[mode]);
      for (std::size_t base : off)
        for (std::size_t lvl = 0; lvl < rho.dims.dims[mode]; ++lvl)
          next.push_back(base + lvl * strides[mode]);
      off = std::move(next);
    }
    return off;
  };
  const auto keep_off = offsets(k);
  const auto tr_off = offsets(traced);

  std::vector<std::size_t> out_dims;
  for (std::size_t mode : k) out_dims.push_back(rho.dims.dims[mode]);
  const std::size_t dk = keep_off.size();
  CMat out(dk, dk);
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = 0; j < dk; ++j) {
      cplx s = 0.0;
      for (std::size_t t : tr_off)
        s += rho.mat(keep_off[i] + t, keep_off[j] + t);
      out(i, j) = s;
    }
  return DensityMatrix{ModeDims(std::move(out_dims)), std::move(out)};
}

Operator number_operator(const ModeDims& dims) {
  const std::size_t d = dims.total();
  CMat m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    m(i, i) = static_cast<double>(dims.occupation_sum(i));
  return Operator{dims, std::move(m)};
}

double mean_photon(const DensityMatrix& rho) {
  double s = 0.0;
  for (std::size_t i = 0; i < rho.mat.rows(); ++i)
    s += rho.mat(i, i).real() * static_cast<double>(rho.dims.occupation_sum(i));
  return s;
}

double mean_photon(const StateVector& psi) {
  double s = 0.0;
  for (std::size_t i = 0; i < psi.amps.size(); ++i)
    s += std::norm(psi.amps[i]) * static_cast<double>(psi.dims.occupation_sum(i));
  return s;
}

DensityMatrix thermal_state(double nu, std::size_t cutoff) {
  if (nu < 0.0) throw std::invalid_argument("thermal_state: nu must be >= 0");
  if (cutoff < 1) throw std::invalid_argument("thermal_state: cutoff must be >= 1");
  CMat m(cutoff, cutoff);
  if (nu == 0.0) {
    m(0, 0) = 1.0;
  } else {
    const double r = nu / (nu + 1.0);
    double w = 1.0 / (nu + 1.0), sum = 0.0;
    for (std::size_t n = 0; n < cutoff; ++n, w *= r) {
      m(n, n) = w;
      sum += w;
    }
    for (std::size_t n = 0; n < cutoff; ++n) m(n, n) /= sum;
  }
  return DensityMatrix{ModeDims({cutoff}), std::move(m)};
}

std::size_t thermal_cutoff(double nu, double tail) {
  if (nu < 0.0) throw std::invalid_argument("thermal_cutoff: nu must be >= 0");
  if (nu == 0.0) return 1;
  // Tail mass above level d-1 is (nu/(nu+1))^d exactly.
  const double r = nu / (nu + 1.0);
  const double d = std::log(tail) / std::log(r);
  return static_cast<std::size_t>(std::ceil(d)) + 1;
}

DensityMatrix parity_conjugate(const DensityMatrix& rho) {
  const std::size_t d = rho.dims.total();
  std::vector<double> sign(d);
  for (std::size_t i = 0; i < d; ++i)
    sign[i] = (rho.dims.occupation_sum(i) % 2 == 0) ? 1.0 : -1.0;
  DensityMatrix out{rho.dims, CMat(d, d)};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      out.mat(i, j) = sign[i] * sign[j] * rho.mat(i, j);
  return out;
}

StateVector parity_conjugate(const StateVector& psi) {
  StateVector out = psi;
  for (std::size_t i = 0; i < out.amps.size(); ++i)
    if (out.dims.occupation_sum(i) % 2 == 1) out.amps[i] = -out.amps[i];
  return out;
}

DensityMatrix partial_transpose(const DensityMatrix& rho, std::size_t mode) {
  if (mode >= rho.dims.mode_count())
    throw std::invalid_argument("partial_transpose: mode out of range");
  const auto strides = rho.dims.strides();
  const std::size_t s = strides[mode], dm = rho.dims.dims[mode];
  const std::size_t d = rho.dims.total();
  DensityMatrix out{rho.dims, CMat(d, d)};
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t ai = (i / s) % dm;
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t aj = (j / s) % dm;
      const std::size_t ii = i - ai * s + aj * s;
      const std::size_t jj = j - aj * s + ai * s;
      out.mat(ii, jj) = rho.mat(i, j);
    }
  }
  return out;
}

namespace {

std::vector<std::size_t> embed_map(const ModeDims& from, const ModeDims& to) {
  if (from.mode_count() != to.mode_count())
    throw std::invalid_argument("embed: mode count mismatch");
  for (std::size_t k = 0; k < from.mode_count(); ++k)
    if (to.dims[k] < from.dims[k])
      throw std::invalid_argument("embed: target cutoff smaller than source");
  std::vector<std::size_t> map(from.total());
  for (std::size_t i = 0; i < map.size(); ++i)
    map[i] = to.index_of(from.occupation_of(i));
  return map;
}

}  // namespace

DensityMatrix embed(const DensityMatrix& rho, const ModeDims& target) {
  if (rho.dims == target) return rho;
  const auto map = embed_map(rho.dims, target);
  DensityMatrix out{target, CMat(target.total(), target.total())};
  for (std::size_t i = 0; i < map.size(); ++i)
    for (std::size_t j = 0; j < map.size(); ++j)
      out.mat(map[i], map[j]) = rho.mat(i, j);
  return out;
}

StateVector embed(const StateVector& psi, const ModeDims& target) {
  if (psi.dims == target) return psi;
  const auto map = embed_map(psi.dims, target);
  StateVector out{target, std::vector<cplx>(target.total())};
  for (std::size_t i = 0; i < map.size(); ++i) out.amps[map[i]] = psi.amps[i];
  return out;
}

double top_level_mass(const DensityMatrix& rho, std::size_t mode,
                      std::size_t levels) {
  if (mode >= rho.dims.mode_count())
    throw std::invalid_argument("top_level_mass: mode out of range");
  const std::size_t dm = rho.dims.dims[mode];
  const std::size_t lo = dm > levels ? dm - levels : 0;
  const auto strides = rho.dims.strides();
  double s = 0.0;
  for (std::size_t i = 0; i < rho.dims.total(); ++i)
    if ((i / strides[mode]) % dm >= lo) s += rho.mat(i, i).real();
  return s;
}

DensityCheck check_density(const DensityMatrix& rho, bool check_psd) {
  DensityCheck c{};
  c.hermiticity = hermiticity_defect(rho.mat);
  c.trace_defect = std::abs(trace(rho.mat) - 1.0);
  c.min_eig = 0.0;
  if (check_psd) {
    const auto ev = eigvals_hermitian(rho.mat);
    c.min_eig = ev.empty() ? 0.0 : ev.front();
  }
  c.ok = c.hermiticity <= 1e-12 && c.trace_defect <= 1e-12 &&
         (!check_psd || c.min_eig >= -1e-10);
  return c;
}

}  // namespace attenuant
