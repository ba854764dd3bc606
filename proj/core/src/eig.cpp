#include "normgeom/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace normgeom {

namespace {

constexpr double kJacobiTol = 1e-14;
constexpr int kJacobiMaxSweeps = 100;

template <Scalar T>
double off_diagonal_mass(const Matrix<T>& s) {
  double acc = 0.0;
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j)
      if (i != j) acc += abs2_of(s(i, j));
  return std::sqrt(acc);
}

// Classic 2x2 symmetric Jacobi angle for [[a, g], [g, b]] with g real > 0.
struct JacobiAngle {
  double c;
  double s;
};
JacobiAngle jacobi_angle(double a, double b, double g) {
  const double tau = (b - a) / (2.0 * g);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  return {c, t * c};
}

template <Scalar T>
void sort_descending(std::vector<double>& vals, Matrix<T>& vecs) {
  const int n = static_cast<int>(vals.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return vals[i] > vals[j]; });
  std::vector<double> sv(n);
  Matrix<T> sm(vecs.rows(), n);
  for (int k = 0; k < n; ++k) {
    sv[k] = vals[order[k]];
    for (int i = 0; i < vecs.rows(); ++i) sm(i, k) = vecs(i, order[k]);
  }
  vals = std::move(sv);
  vecs = std::move(sm);
}

}  // namespace

template <Scalar T>
EigResult<T> sym_eig(const Matrix<T>& s_in) {
  if (!s_in.square()) throw DimensionMismatch("sym_eig: matrix not square");
  if (!s_in.is_hermitian(1e-10)) throw NotHermitian("sym_eig: matrix not Hermitian within 1e-10");

  const int n = s_in.rows();
  Matrix<T> s = hermitian_part(s_in);
  Matrix<T> v = Matrix<T>::identity(n);
  const double scale = std::max(s.frobenius_norm(), 1e-300);

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_mass(s) <= kJacobiTol * scale) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const T spq = s(p, q);
        const double g = abs_of(spq);
        if (g <= kJacobiTol * scale * 1e-2) continue;
        // Unitary W with W_pp = W_qq = c, W_pq = s e^{i beta},
        // W_qp = -s e^{-i beta}, where beta is the phase of s_pq. Conjugating
        // by diag(e^{i beta/2}, e^{-i beta/2}) reduces it to the real Jacobi
        // rotation on the phase-absorbed block, so W* S W zeroes s_pq.
        const T ph = phase_of(spq);
        const auto [c, sn] = jacobi_angle(real_of(s(p, p)), real_of(s(q, q)), g);
        const T cp = T(c);
        const T w_pq = T(sn) * ph;
        const T w_qp = -T(sn) * conj_of(ph);
        for (int i = 0; i < n; ++i) {  // S <- S W, V <- V W
          const T sin_p = s(i, p), sin_q = s(i, q);
          s(i, p) = cp * sin_p + w_qp * sin_q;
          s(i, q) = w_pq * sin_p + cp * sin_q;
          const T vin_p = v(i, p), vin_q = v(i, q);
          v(i, p) = cp * vin_p + w_qp * vin_q;
          v(i, q) = w_pq * vin_p + cp * vin_q;
        }
        for (int j = 0; j < n; ++j) {  // S <- W* S
          const T srow_p = s(p, j), srow_q = s(q, j);
          s(p, j) = cp * srow_p + conj_of(w_qp) * srow_q;
          s(q, j) = conj_of(w_pq) * srow_p + cp * srow_q;
        }
        s(p, q) = T(0);
        s(q, p) = T(0);
      }
    }
  }

  EigResult<T> r;
  r.values.resize(n);
  for (int i = 0; i < n; ++i) r.values[i] = real_of(s(i, i));
  r.vectors = std::move(v);
  sort_descending(r.values, r.vectors);
  return r;
}

template <Scalar T>
SvdResult<T> svd(const Matrix<T>& m_in) {
  // Work on the tall orientation so the one-sided sweep orthogonalizes at
  // most rows() columns.
  if (m_in.rows() < m_in.cols()) {
    SvdResult<T> t = svd(m_in.adjoint());
    return {std::move(t.v), std::move(t.singular_values), std::move(t.u)};
  }

  const int mrows = m_in.rows();
  const int n = m_in.cols();
  Matrix<T> a = m_in;
  Matrix<T> v = Matrix<T>::identity(n);
  const double scale = std::max(a.frobenius_norm(), 1e-300);

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0;
        T gamma(0);
        for (int i = 0; i < mrows; ++i) {
          alpha += abs2_of(a(i, p));
          beta += abs2_of(a(i, q));
          gamma += conj_of(a(i, p)) * a(i, q);
        }
        const double g = abs_of(gamma);
        if (g <= 1e-300 || g <= kJacobiTol * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const T ph = phase_of(gamma);
        const auto [c, sn] = jacobi_angle(alpha, beta, g);
        const T cp = T(c);
        for (int i = 0; i < mrows; ++i) {
          const T ap = a(i, p), aq = a(i, q) * conj_of(ph);
          a(i, p) = cp * ap - T(sn) * aq;
          a(i, q) = T(sn) * ap + cp * aq;
        }
        for (int i = 0; i < n; ++i) {
          const T vp = v(i, p), vq = v(i, q) * conj_of(ph);
          v(i, p) = cp * vp - T(sn) * vq;
          v(i, q) = T(sn) * vp + cp * vq;
        }
      }
    }
    if (!rotated) break;
  }

  // Column norms are the singular values.
  std::vector<double> sigma(n);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < mrows; ++i) s += abs2_of(a(i, j));
    sigma[j] = std::sqrt(s);
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return sigma[i] > sigma[j]; });

  SvdResult<T> r;
  r.singular_values.resize(n);
  r.u = Matrix<T>(mrows, n);
  r.v = Matrix<T>(n, n);
  const double sing_cut = 1e-13 * std::max(scale, 1.0);
  std::vector<Vec<T>> u_cols;
  for (int k = 0; k < n; ++k) {
    const int j = order[k];
    r.singular_values[k] = sigma[j];
    for (int i = 0; i < n; ++i) r.v(i, k) = v(i, j);
    Vec<T> col = a.column(j);
    if (sigma[j] > sing_cut) {
      for (auto& x : col) x *= T(1.0 / sigma[j]);
    } else {
      // Null column: complete to an orthonormal set against the ones built
      // so far using coordinate candidates.
      col.assign(mrows, T(0));
      for (int cand = 0; cand < mrows; ++cand) {
        Vec<T> e = unit_vector<T>(mrows, cand);
        for (const auto& u : u_cols) {
          const T proj = dot<T>(e, u);
          e = add_scaled<T>(e, -proj, u);
        }
        const double nn = norm2<T>(e);
        if (nn > 0.5) {  // comfortably independent
          for (auto& x : e) x *= T(1.0 / nn);
          col = std::move(e);
          break;
        }
      }
    }
    u_cols.push_back(col);
    for (int i = 0; i < mrows; ++i) r.u(i, k) = col[i];
  }
  return r;
}

template <Scalar T>
Matrix<T> psd_sqrt(const Matrix<T>& a) {
  const EigResult<T> e = sym_eig(a);  // throws NotHermitian
  const double top = e.values.empty() ? 0.0 : std::max(e.values.front(), 0.0);
  if (!e.values.empty() && e.values.back() < -1e-8 * std::max(top, 1e-300))
    throw NotPsd("psd_sqrt: matrix has a significantly negative eigenvalue");
  const int n = a.rows();
  Matrix<T> r(n, n);
  for (int k = 0; k < n; ++k) {
    const double lam = std::max(e.values[k], 0.0);
    const double s = std::sqrt(lam);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        r(i, j) += e.vectors(i, k) * T(s) * conj_of(e.vectors(j, k));
  }
  return hermitian_part(r);
}

template <Scalar T>
Matrix<T> orthonormal_columns(const Matrix<T>& m, double rel_cutoff) {
  if (m.cols() == 0 || m.rows() == 0) return Matrix<T>(m.rows(), 0);
  const SvdResult<T> d = svd(m);
  const double top = d.singular_values.front();
  if (top <= 0.0) return Matrix<T>(m.rows(), 0);
  int rank = 0;
  while (rank < static_cast<int>(d.singular_values.size()) && d.singular_values[rank] > rel_cutoff * top) ++rank;
  Matrix<T> basis(m.rows(), rank);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < m.rows(); ++i) basis(i, j) = d.u(i, j);
  return basis;
}

template <Scalar T>
double max_principal_angle(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("max_principal_angle: ambient dims differ");
  if (a.cols() != b.cols()) return 1.5707963267948966;  // different dimensions: right angle
  if (a.cols() == 0) return 0.0;
  const SvdResult<T> d = svd(a.adjoint() * b);
  double cmin = 1.0;
  for (double s : d.singular_values) cmin = std::min(cmin, s);
  cmin = std::clamp(cmin, -1.0, 1.0);
  return std::acos(cmin);
}

template <Scalar T>
T determinant(const Matrix<T>& m) {
  if (!m.square()) throw DimensionMismatch("determinant: matrix not square");
  const int n = m.rows();
  Matrix<T> lu = m;
  T det(1);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = abs_of(lu(k, k));
    for (int i = k + 1; i < n; ++i)
      if (abs_of(lu(i, k)) > best) {
        best = abs_of(lu(i, k));
        piv = i;
      }
    if (best == 0.0) return T(0);
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      det = -det;
    }
    det *= lu(k, k);
    for (int i = k + 1; i < n; ++i) {
      const T f = lu(i, k) / lu(k, k);
      for (int j = k; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  return det;
}

template <Scalar T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.square()) throw DimensionMismatch("inverse: matrix not square");
  const int n = m.rows();
  Matrix<T> a = m;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = abs_of(a(k, k));
    for (int i = k + 1; i < n; ++i)
      if (abs_of(a(i, k)) > best) {
        best = abs_of(a(i, k));
        piv = i;
      }
    if (best < 1e-300) throw Error("inverse: matrix numerically singular");
    if (piv != k)
      for (int j = 0; j < n; ++j) {
        std::swap(a(k, j), a(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    const T d = a(k, k);
    for (int j = 0; j < n; ++j) {
      a(k, j) /= d;
      inv(k, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      const T f = a(i, k);
      if (f == T(0)) continue;
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

template <Scalar T>
PsdMatrix<T>::PsdMatrix(const Matrix<T>& a) : mat_(hermitian_part(a)), eig_(sym_eig(mat_)) {
  if (!a.is_hermitian(1e-12))
    throw NotHermitian("PsdMatrix: matrix not self-adjoint within 1e-12");
  const double top = std::max(eig_.values.front(), 0.0);
  if (eig_.values.back() < -1e-12 * std::max(top, 1e-300))
    throw NotPsd("PsdMatrix: negative eigenvalue beyond tolerance");
}

template <Scalar T>
double PsdMatrix<T>::det() const {
  double d = 1.0;
  for (double v : eig_.values) d *= std::max(v, 0.0);
  return d;
}

template <Scalar T>
PsdMatrix<T> PsdMatrix<T>::sqrt() const {
  const int n = dim();
  Matrix<T> r(n, n);
  for (int k = 0; k < n; ++k) {
    const double s = std::sqrt(std::max(eig_.values[k], 0.0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        r(i, j) += eig_.vectors(i, k) * T(s) * conj_of(eig_.vectors(j, k));
  }
  return PsdMatrix<T>(hermitian_part(r));
}

template EigResult<double> sym_eig(const Matrix<double>&);
template EigResult<std::complex<double>> sym_eig(const Matrix<std::complex<double>>&);
template SvdResult<double> svd(const Matrix<double>&);
template SvdResult<std::complex<double>> svd(const Matrix<std::complex<double>>&);
template Matrix<double> psd_sqrt(const Matrix<double>&);
template Matrix<std::complex<double>> psd_sqrt(const Matrix<std::complex<double>>&);
template Matrix<double> orthonormal_columns(const Matrix<double>&, double);
template Matrix<std::complex<double>> orthonormal_columns(const Matrix<std::complex<double>>&, double);
template double max_principal_angle(const Matrix<double>&, const Matrix<double>&);
template double max_principal_angle(const Matrix<std::complex<double>>&, const Matrix<std::complex<double>>&);
template double determinant(const Matrix<double>&);
template std::complex<double> determinant(const Matrix<std::complex<double>>&);
template Matrix<double> inverse(const Matrix<double>&);
template Matrix<std::complex<double>> inverse(const Matrix<std::complex<double>>&);
template class PsdMatrix<double>;
template class PsdMatrix<std::complex<double>>;

}  // namespace normgeom
