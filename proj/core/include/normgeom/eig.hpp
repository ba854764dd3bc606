#pragma once

#include <vector>

#include "normgeom/matrix.hpp"

namespace normgeom {

template <Scalar T>
struct EigResult {
  std::vector<double> values;  // descending
  Matrix<T> vectors;           // columns, orthonormal; S = V diag(values) V*
};

// Hermitian eigendecomposition by cyclic Jacobi rotations. Off-diagonal mass
// threshold 1e-14 relative, at most 100 sweeps. Throws NotHermitian when the
// input deviates from self-adjointness by more than 1e-10 relative.
template <Scalar T>
EigResult<T> sym_eig(const Matrix<T>& s);

template <Scalar T>
struct SvdResult {
  Matrix<T> u;
  std::vector<double> singular_values;  // descending, >= 0
  Matrix<T> v;                          // m = u diag(sigma) v*
};

// One-sided Jacobi SVD for arbitrary (small) rectangular matrices.
template <Scalar T>
SvdResult<T> svd(const Matrix<T>& m);

// Principal square root of a PSD matrix. Throws NotHermitian, or NotPsd when
// the least eigenvalue drops below -1e-8 times the largest; small negative
// eigenvalues above that threshold are clamped to zero.
template <Scalar T>
Matrix<T> psd_sqrt(const Matrix<T>& a);

// Orthonormal basis of the column span, rank-revealed by a singular-value
// cutoff relative to the largest singular value. Returns an n-by-rank matrix.
template <Scalar T>
Matrix<T> orthonormal_columns(const Matrix<T>& m, double rel_cutoff = 1e-7);

// Largest principal angle between the column spans of two orthonormal bases.
template <Scalar T>
double max_principal_angle(const Matrix<T>& a, const Matrix<T>& b);

// Determinant via LU with partial pivoting.
template <Scalar T>
T determinant(const Matrix<T>& m);

// Inverse via Gauss-Jordan with partial pivoting. Throws Error if singular.
template <Scalar T>
Matrix<T> inverse(const Matrix<T>& m);

// Hermitian PSD matrix with its eigendecomposition cached at construction.
// Invariants: ||A - A*|| <= 1e-12 ||A||, min eigenvalue >= -1e-12 max.
template <Scalar T>
class PsdMatrix {
 public:
  explicit PsdMatrix(const Matrix<T>& a);

  const Matrix<T>& matrix() const { return mat_; }
  const std::vector<double>& eigenvalues() const { return eig_.values; }
  const Matrix<T>& eigenvectors() const { return eig_.vectors; }
  int dim() const { return mat_.rows(); }

  double min_eigenvalue() const { return eig_.values.back(); }
  double max_eigenvalue() const { return eig_.values.front(); }

  double det() const;
  PsdMatrix sqrt() const;

 private:
  Matrix<T> mat_;
  EigResult<T> eig_;
};

extern template EigResult<double> sym_eig(const Matrix<double>&);
extern template EigResult<std::complex<double>> sym_eig(const Matrix<std::complex<double>>&);
extern template SvdResult<double> svd(const Matrix<double>&);
extern template SvdResult<std::complex<double>> svd(const Matrix<std::complex<double>>&);
extern template Matrix<double> psd_sqrt(const Matrix<double>&);
extern template Matrix<std::complex<double>> psd_sqrt(const Matrix<std::complex<double>>&);
extern template Matrix<double> orthonormal_columns(const Matrix<double>&, double);
extern template Matrix<std::complex<double>> orthonormal_columns(const Matrix<std::complex<double>>&, double);
extern template double max_principal_angle(const Matrix<double>&, const Matrix<double>&);
extern template double max_principal_angle(const Matrix<std::complex<double>>&, const Matrix<std::complex<double>>&);
extern template double determinant(const Matrix<double>&);
extern template std::complex<double> determinant(const Matrix<std::complex<double>>&);
extern template Matrix<double> inverse(const Matrix<double>&);
extern template Matrix<std::complex<double>> inverse(const Matrix<std::complex<double>>&);
extern template class PsdMatrix<double>;
extern template class PsdMatrix<std::complex<double>>;

}  // namespace normgeom
