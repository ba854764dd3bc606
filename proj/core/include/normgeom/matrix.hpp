#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "normgeom/errors.hpp"
#include "normgeom/scalar.hpp"

namespace normgeom {

template <Scalar T>
using Vec = std::vector<T>;

// Dense row-major matrix over K. Everything in this library is tiny
// (n <= 8 square operators plus skinny sample matrices), so no view types,
// no expression templates.
template <Scalar T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, T(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    Matrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != c) throw DimensionMismatch("from_rows: ragged rows");
      int j = 0;
      for (const T& v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  // Columns are the given vectors.
  static Matrix from_columns(const std::vector<Vec<T>>& cols) {
    if (cols.empty()) return Matrix(0, 0);
    const int r = static_cast<int>(cols.front().size());
    Matrix m(r, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
      if (static_cast<int>(cols[j].size()) != r) throw DimensionMismatch("from_columns: ragged columns");
      for (int i = 0; i < r; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::span<const T> row(int i) const { return {data_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)}; }

  Vec<T> column(int j) const {
    Vec<T> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix adjoint() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(j, i) = conj_of((*this)(i, j));
    return m;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix m = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] += o.data_[k];
    return m;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix m = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] -= o.data_[k];
    return m;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
    Matrix m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T a = (*this)(i, k);
        if (a == T(0)) continue;
        for (int j = 0; j < o.cols_; ++j) m(i, j) += a * o(k, j);
      }
    return m;
  }

  Matrix operator*(T s) const {
    Matrix m = *this;
    for (auto& v : m.data_) v *= s;
    return m;
  }

  Vec<T> apply(std::span<const T> x) const {
    if (static_cast<int>(x.size()) != cols_) throw DimensionMismatch("matrix-vector shape");
    Vec<T> y(rows_, T(0));
    for (int i = 0; i < rows_; ++i) {
      T acc(0);
      for (int j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
      y[i] = acc;
    }
    return y;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += abs2_of(v);
    return std::sqrt(s);
  }

  double max_abs() const {
    double s = 0.0;
    for (const auto& v : data_) s = std::max(s, abs_of(v));
    return s;
  }

  T trace() const {
    T s(0);
    for (int i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  bool is_hermitian(double tol) const {
    if (!square()) return false;
    double dev = 0.0;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) dev = std::max(dev, abs_of((*this)(i, j) - conj_of((*this)(j, i))));
    return dev <= tol * std::max(1.0, frobenius_norm());
  }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

template <Scalar T>
Matrix<T> operator*(T s, const Matrix<T>& m) {
  return m * s;
}

template <Scalar T>
Matrix<T> hermitian_part(const Matrix<T>& m) {
  Matrix<T> h(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) h(i, j) = (m(i, j) + conj_of(m(j, i))) * T(0.5);
  return h;
}

// ---- vector helpers -------------------------------------------------------
// Pairing convention used throughout: <x, y> = sum_i x_i * conj(y_i),
// linear in the first argument.

template <Scalar T>
T dot(std::span<const T> x, std::span<const T> y) {
  if (x.size() != y.size()) throw DimensionMismatch("dot: size mismatch");
  T s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * conj_of(y[i]);
  return s;
}

template <Scalar T>
double norm2_sq(std::span<const T> x) {
  double s = 0.0;
  for (const auto& v : x) s += abs2_of(v);
  return s;
}

template <Scalar T>
double norm2(std::span<const T> x) {
  return std::sqrt(norm2_sq<T>(x));
}

template <Scalar T>
Vec<T> scaled(std::span<const T> x, T s) {
  Vec<T> y(x.begin(), x.end());
  for (auto& v : y) v *= s;
  return y;
}

template <Scalar T>
Vec<T> add(std::span<const T> x, std::span<const T> y) {
  if (x.size() != y.size()) throw DimensionMismatch("add: size mismatch");
  Vec<T> z(x.begin(), x.end());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += y[i];
  return z;
}

template <Scalar T>
Vec<T> sub(std::span<const T> x, std::span<const T> y) {
  if (x.size() != y.size()) throw DimensionMismatch("sub: size mismatch");
  Vec<T> z(x.begin(), x.end());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] -= y[i];
  return z;
}

// z = x + s*y
template <Scalar T>
Vec<T> add_scaled(std::span<const T> x, T s, std::span<const T> y) {
  if (x.size() != y.size()) throw DimensionMismatch("add_scaled: size mismatch");
  Vec<T> z(x.begin(), x.end());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += s * y[i];
  return z;
}

template <Scalar T>
Vec<T> unit_vector(int n, int i) {
  Vec<T> e(n, T(0));
  e[i] = T(1);
  return e;
}

// Angle between the complex lines spanned by unit-ish vectors x and y,
// i.e. after optimal phase alignment. Returns a value in [0, pi/2].
template <Scalar T>
double line_angle(std::span<const T> x, std::span<const T> y) {
  const double nx = norm2<T>(x), ny = norm2<T>(y);
  if (nx == 0.0 || ny == 0.0) return 1.5707963267948966;
  double c = abs_of(dot<T>(x, y)) / (nx * ny);
  c = std::clamp(c, 0.0, 1.0);
  return std::acos(c);
}

// Deterministic phase normalization: make the first coordinate of largest
// modulus real positive.
template <Scalar T>
Vec<T> phase_normalized(std::span<const T> x) {
  int best = 0;
  double best_abs = -1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double a = abs_of(x[i]);
    if (a > best_abs + 1e-15) {
      best_abs = a;
      best = static_cast<int>(i);
    }
  }
  if (best_abs <= 0.0) return Vec<T>(x.begin(), x.end());
  const T ph = phase_of(x[best]);
  return scaled<T>(x, conj_of(ph));
}

}  // namespace normgeom
