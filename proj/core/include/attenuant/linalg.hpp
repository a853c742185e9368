#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace attenuant {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Everything in this library is small and
/// dense, so a flat vector plus explicit loops beats pulling in a linear
/// algebra dependency.
class CMat {
 public:
  CMat() = default;
  CMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static CMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  cplx* data() { return a_.data(); }
  const cplx* data() const { return a_.data(); }

  CMat& operator+=(const CMat& o);
  CMat& operator-=(const CMat& o);
  CMat& operator*=(cplx s);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> a_;
};

CMat operator+(CMat a, const CMat& b);
CMat operator-(CMat a, const CMat& b);
CMat operator*(cplx s, CMat a);

CMat matmul(const CMat& a, const CMat& b);
CMat adjoint(const CMat& a);
CMat transpose(const CMat& a);
CMat conjugate(const CMat& a);
CMat kron(const CMat& a, const CMat& b);
cplx trace(const CMat& a);
double max_abs(const CMat& a);
double max_abs_diff(const CMat& a, const CMat& b);
double fro_norm(const CMat& a);
double hermiticity_defect(const CMat& a);  // max |a - a^dag| entrywise

/// a * b * a^dag
CMat conjugate_by(const CMat& a, const CMat& b);

/// Eigendecomposition a = vectors * diag(values) * vectors^dag,
/// values ascending.
struct EigH {
  std::vector<double> values;
  CMat vectors;
};

/// Cyclic Jacobi for Hermitian matrices. Stops when the off-diagonal
/// Frobenius norm drops below tol relative to the matrix scale, or after
/// max_sweeps sweeps.
EigH eig_hermitian(CMat a, double tol = 1e-13, int max_sweeps = 100);

/// Eigenvalues only, ascending.
std::vector<double> eigvals_hermitian(const CMat& a, double tol = 1e-13);

}  // namespace attenuant
