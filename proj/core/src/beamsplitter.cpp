#include "attenuant/beamsplitter.hpp"

#include <cmath>
#include <stdexcept>

#include "attenuant/linalg.hpp"

namespace attenuant {

namespace {

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("beam splitter: lambda must be in [0, 1]");
}

double binom(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double c = 1.0;
  for (std::size_t j = 1; j <= k; ++j)
    c *= static_cast<double>(n - k + j) / static_cast<double>(j);
  return c;
}

}  // namespace

BlockUnitary bs_block(std::size_t N, double lambda) {
  check_lambda(lambda);
  const std::size_t d = N + 1;
  const double theta = std::acos(std::sqrt(lambda));

  // H = i * G with G[l+1,l] = sqrt((l+1)(N-l)) = -G[l,l+1]; H is Hermitian,
  // and U = exp(theta G) = V exp(-i theta Lambda) V^dag.
  CMat h(d, d);
  for (std::size_t l = 0; l + 1 < d; ++l) {
    const double g = std::sqrt(static_cast<double>((l + 1) * (N - l)));
    h(l + 1, l) = cplx(0.0, g);
    h(l, l + 1) = cplx(0.0, -g);
  }
  const EigH e = eig_hermitian(h);

  BlockUnitary u;
  u.total_photons = N;
  u.m.assign(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        const cplx ph = std::polar(1.0, -theta * e.values[k]);
        s += e.vectors(i, k) * ph * std::conj(e.vectors(j, k));
      }
      u.m[i * d + j] = s.real();
    }
  return u;
}

double coeff_0n(std::size_t n, double lambda, std::size_t l) {
  check_lambda(lambda);
  if (l > n) throw std::invalid_argument("coeff_0n: l out of range");
  return std::sqrt(binom(n, l)) * std::pow(1.0 - lambda, 0.5 * l) *
         std::pow(lambda, 0.5 * (n - l));
}

double coeff_1n(std::size_t n, double lambda, std::size_t l) {
  check_lambda(lambda);
  if (l > n + 1) throw std::invalid_argument("coeff_1n: l out of range");
  // The (n+1)(1-lambda) prefactor cancels one power of (1-lambda) for
  // l >= 1; the edge cases keep everything finite at lambda in {0, 1}.
  if (l == 0)
    return -std::sqrt((n + 1) * (1.0 - lambda)) * std::pow(lambda, 0.5 * n);
  if (l == n + 1)
    return std::sqrt(static_cast<double>(n + 1)) *
           std::pow(1.0 - lambda, 0.5 * n) * std::sqrt(lambda);
  return -std::sqrt(binom(n + 1, l) / (n + 1)) *
         std::pow(1.0 - lambda, 0.5 * (l - 1)) *
         std::pow(lambda, 0.5 * (n - l)) *
         ((n + 1) * (1.0 - lambda) - static_cast<double>(l));
}

StateVector bs_apply(const StateVector& psi, double lambda) {
  if (psi.dims.mode_count() != 2)
    throw std::invalid_argument("bs_apply: two-mode state required");
  return bs_apply_modes(psi, 0, 1, lambda);
}

StateVector bs_apply_modes(const StateVector& psi, std::size_t i, std::size_t j,
                           double lambda, bool inverse) {
  check_lambda(lambda);
  const std::size_t m = psi.dims.mode_count();
  if (i >= m || j >= m || i == j)
    throw std::invalid_argument("bs_apply_modes: bad mode pair");

  const std::size_t di = psi.dims.dims[i], dj = psi.dims.dims[j];
  const std::size_t dout = di + dj - 1;  // exact: photon number is conserved
  std::vector<std::size_t> odims = psi.dims.dims;
  odims[i] = dout;
  odims[j] = dout;
  const ModeDims out_dims{odims};

  const auto in_strides = psi.dims.strides();
  const auto out_strides = out_dims.strides();

  // Spectator offsets: flat base indices with modes i, j at level 0.
  std::vector<std::size_t> spec_in{0}, spec_out{0};
  for (std::size_t k = 0; k < m; ++k) {
    if (k == i || k == j) continue;
    std::vector<std::size_t> nin, nout;
    for (std::size_t b = 0; b < spec_in.size(); ++b)
      for (std::size_t lvl = 0; lvl < psi.dims.dims[k]; ++lvl) {
        nin.push_back(spec_in[b] + lvl * in_strides[k]);
        nout.push_back(spec_out[b] + lvl * out_strides[k]);
      }
    spec_in = std::move(nin);
    spec_out = std::move(nout);
  }

  const std::size_t n_max = di + dj - 2;
  // Blocks are built lazily: states often occupy only a few photon-number
  // sectors, and each block costs an eigendecomposition.
  std::vector<BlockUnitary> blocks(n_max + 1);
  std::vector<bool> have(n_max + 1, false);

  StateVector out{out_dims, std::vector<cplx>(out_dims.total())};
  std::vector<cplx> vin, vout;
  for (std::size_t s = 0; s < spec_in.size(); ++s) {
    for (std::size_t N = 0; N <= n_max; ++N) {
      vin.assign(N + 1, cplx{});
      bool nonzero = false;
      for (std::size_t l = 0; l <= N; ++l) {
        if (l >= di || N - l >= dj) continue;
        const cplx a =
            psi.amps[spec_in[s] + l * in_strides[i] + (N - l) * in_strides[j]];
        vin[l] = a;
        nonzero = nonzero || a != cplx{};
      }
      if (!nonzero) continue;
      if (!have[N]) {
        blocks[N] = bs_block(N, lambda);
        have[N] = true;
      }
      const BlockUnitary& u = blocks[N];
      vout.assign(N + 1, cplx{});
      for (std::size_t r = 0; r <= N; ++r) {
        cplx acc = 0.0;
        for (std::size_t c = 0; c <= N; ++c)
          acc += (inverse ? u.at(c, r) : u.at(r, c)) * vin[c];
        vout[r] = acc;
      }
      for (std::size_t l = 0; l <= N; ++l)
        out.amps[spec_out[s] + l * out_strides[i] + (N - l) * out_strides[j]] =
            vout[l];
    }
  }
  return out;
}

DensityMatrix bs_conjugate_modes(const DensityMatrix& rho, std::size_t i,
                                 std::size_t j, double lambda, bool inverse) {
  check_lambda(lambda);
  const std::size_t m = rho.dims.mode_count();
  if (i >= m || j >= m || i == j)
    throw std::invalid_argument("bs_conjugate_modes: bad mode pair");

  const std::size_t di = rho.dims.dims[i], dj = rho.dims.dims[j];
  const std::size_t dout = di + dj - 1;
  std::vector<std::size_t> odims = rho.dims.dims;
  odims[i] = dout;
  odims[j] = dout;
  const ModeDims out_dims{odims};
  const DensityMatrix src = embed(rho, out_dims);

  const auto strides = out_dims.strides();
  std::vector<std::size_t> spec{0};
  for (std::size_t k = 0; k < m; ++k) {
    if (k == i || k == j) continue;
    std::vector<std::size_t> next;
    for (std::size_t b : spec)
      for (std::size_t lvl = 0; lvl < out_dims.dims[k]; ++lvl)
        next.push_back(b + lvl * strides[k]);
    spec = std::move(next);
  }

  // Only blocks reachable from the embedded input carry amplitude; the
  // input occupies levels < di (mode i) and < dj (mode j). Unitaries are
  // built on first use.
  const std::size_t n_max = di + dj - 2;
  std::vector<BlockUnitary> blocks(n_max + 1);
  std::vector<bool> have(n_max + 1, false);
  const auto block = [&](std::size_t N) -> const BlockUnitary& {
    if (!have[N]) {
      blocks[N] = bs_block(N, lambda);
      have[N] = true;
    }
    return blocks[N];
  };
  std::vector<std::vector<std::size_t>> pos(n_max + 1);
  for (std::size_t N = 0; N <= n_max; ++N) {
    pos[N].resize(N + 1);
    for (std::size_t l = 0; l <= N; ++l)
      pos[N][l] = l * strides[i] + (N - l) * strides[j];
  }

  DensityMatrix out{out_dims, CMat(out_dims.total(), out_dims.total())};
  std::vector<cplx> buf, tmp;
  for (std::size_t sr : spec) {
    for (std::size_t sc : spec) {
      for (std::size_t N = 0; N <= n_max; ++N) {
        const std::size_t dn = N + 1;
        for (std::size_t Np = 0; Np <= n_max; ++Np) {
          const std::size_t dp = Np + 1;
          buf.assign(dn * dp, cplx{});
          bool nonzero = false;
          for (std::size_t l = 0; l < dn; ++l)
            for (std::size_t lp = 0; lp < dp; ++lp) {
              const cplx v = src.mat(sr + pos[N][l], sc + pos[Np][lp]);
              buf[l * dp + lp] = v;
              nonzero = nonzero || v != cplx{};
            }
          if (!nonzero) continue;
          const BlockUnitary& un = block(N);
          const BlockUnitary& up = block(Np);
          // U_N * buf * U_Np^T (blocks are real; inverse transposes both).
          tmp.assign(dn * dp, cplx{});
          for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t c = 0; c < dn; ++c) {
              const double u = inverse ? un.at(c, r) : un.at(r, c);
              if (u == 0.0) continue;
              for (std::size_t lp = 0; lp < dp; ++lp)
                tmp[r * dp + lp] += u * buf[c * dp + lp];
            }
          for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t c = 0; c < dp; ++c) {
              cplx acc = 0.0;
              for (std::size_t lp = 0; lp < dp; ++lp)
                acc += tmp[r * dp + lp] * (inverse ? up.at(lp, c) : up.at(c, lp));
              out.mat(sr + pos[N][r], sc + pos[Np][c]) = acc;
            }
        }
      }
    }
  }
  return out;
}

}  // namespace attenuant
