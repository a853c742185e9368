#include "attenuant/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace attenuant {

CMat CMat::identity(std::size_t n) {
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMat& CMat::operator+=(const CMat& o) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

CMat& CMat::operator-=(const CMat& o) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

CMat& CMat::operator*=(cplx s) {
  for (auto& x : a_) x *= s;
  return *this;
}

CMat operator+(CMat a, const CMat& b) { return a += b; }
CMat operator-(CMat a, const CMat& b) { return a -= b; }
CMat operator*(cplx s, CMat a) { return a *= s; }

CMat matmul(const CMat& a, const CMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  CMat c(n, m);
  // i-k-j order keeps the inner loop contiguous in both b and c.
  for (std::size_t i = 0; i < n; ++i) {
    cplx* ci = c.data() + i * m;
    const cplx* ai = a.data() + i * k;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = ai[p];
      if (aip == cplx{}) continue;
      const cplx* bp = b.data() + p * m;
      for (std::size_t j = 0; j < m; ++j) ci[j] += aip * bp[j];
    }
  }
  return c;
}

CMat adjoint(const CMat& a) {
  CMat r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

CMat transpose(const CMat& a) {
  CMat r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

CMat conjugate(const CMat& a) {
  CMat r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = std::conj(a(i, j));
  return r;
}

CMat kron(const CMat& a, const CMat& b) {
  CMat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return r;
}

cplx trace(const CMat& a) {
  cplx t = 0.0;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

double max_abs(const CMat& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j)));
  return m;
}

double max_abs_diff(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

double fro_norm(const CMat& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

double hermiticity_defect(const CMat& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

CMat conjugate_by(const CMat& a, const CMat& b) {
  return matmul(matmul(a, b), adjoint(a));
}

namespace {

double offdiag_fro(const CMat& a) {
  double s = 0.0;
  const std::size_t n = a.rows();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) s += std::norm(a(p, q));
  return std::sqrt(2.0 * s);
}

}  // namespace

EigH eig_hermitian(CMat a, double tol, int max_sweeps) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("eig_hermitian: not square");
  // Stop relative to the matrix scale: an absolute threshold stalls on
  // large-norm generators.
  const double scale = std::max(1.0, fro_norm(a));
  CMat v = CMat::identity(n);

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (offdiag_fro(a) <= tol * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double abs_apq = std::abs(apq);
        if (abs_apq <= 1e-300) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const cplx phase = apq / abs_apq;  // e^{i phi}
        const double tau = (aqq - app) / (2.0 * abs_apq);
        const double t =
            (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                         : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Unitary J differs from I in rows/cols p,q:
        //   J(p,p)=c        J(p,q)=s
        //   J(q,p)=-s e^{-i phi}   J(q,q)=c e^{-i phi}
        const cplx jqp = -s * std::conj(phase);
        const cplx jqq = c * std::conj(phase);
        // A <- J^dag A J: columns first, then rows.
        for (std::size_t r = 0; r < n; ++r) {
          const cplx arp = a(r, p), arq = a(r, q);
          a(r, p) = arp * c + arq * jqp;
          a(r, q) = arp * s + arq * jqq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const cplx apr = a(p, r), aqr = a(q, r);
          a(p, r) = c * apr + std::conj(jqp) * aqr;
          a(q, r) = s * apr + std::conj(jqq) * aqr;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const cplx vrp = v(r, p), vrq = v(r, q);
          v(r, p) = vrp * c + vrq * jqp;
          v(r, q) = vrp * s + vrq * jqq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::vector<double> vals(n);
  for (std::size_t i = 0; i < n; ++i) vals[i] = a(i, i).real();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return vals[x] < vals[y]; });

  EigH out;
  out.values.resize(n);
  out.vectors = CMat(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = vals[order[j]];
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

std::vector<double> eigvals_hermitian(const CMat& a, double tol) {
  return eig_hermitian(a, tol).values;
}

}  // namespace attenuant
