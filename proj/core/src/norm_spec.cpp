#include "normgeom/norm_spec.hpp"

#include <cmath>
#include <mutex>

#include "normgeom/errors.hpp"
#include "normgeom/lp.hpp"
#include "normgeom/norm_ops.hpp"

namespace normgeom {

namespace {

// Stack real row vectors into a matrix.
Matrix<double> stack_rows(const std::vector<std::vector<double>>& rows, int n) {
  Matrix<double> m(static_cast<int>(rows.size()), n);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw SchemaError("polytope row has wrong dimension");
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<double>> enumerate_h_vertices(const std::vector<std::vector<double>>& functionals, int n) {
  const int m = static_cast<int>(functionals.size());
  std::vector<std::vector<double>> verts;

  std::vector<int> idx(n);
  // All n-subsets of functionals, all sign patterns with the first sign +1;
  // the mirror vertex is appended explicitly.
  auto solve_active = [&](const std::vector<int>& sel, unsigned signs) -> bool {
    Matrix<double> a(n, n);
    Vec<double> b(n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) a(r, c) = functionals[sel[r]][c];
      b[r] = ((signs >> r) & 1u) ? -1.0 : 1.0;
    }
    Matrix<double> ainv;
    try {
      ainv = inverse(a);
    } catch (const Error&) {
      return false;  // singular subset
    }
    const Vec<double> x = ainv.apply(b);
    for (const auto& f : functionals) {
      double v = 0.0;
      for (int c = 0; c < n; ++c) v += f[c] * x[c];
      if (std::abs(v) > 1.0 + 1e-9) return false;
    }
    for (const auto& w : verts) {
      double d1 = 0.0, d2 = 0.0;
      for (int c = 0; c < n; ++c) {
        d1 = std::max(d1, std::abs(w[c] - x[c]));
        d2 = std::max(d2, std::abs(w[c] + x[c]));
      }
      if (d1 < 1e-8 || d2 < 1e-8) return true;  // duplicate up to sign
    }
    verts.push_back(x);
    Vec<double> neg(x);
    for (auto& v : neg) v = -v;
    verts.push_back(neg);
    return true;
  };

  std::vector<int> sel(n);
  auto recurse = [&](auto&& self, int start, int depth) -> void {
    if (depth == n) {
      const unsigned patterns = 1u << (n - 1);
      for (unsigned s = 0; s < patterns; ++s) solve_active(sel, s << 1);
      return;
    }
    for (int i = start; i + (n - depth) <= m; ++i) {
      sel[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  recurse(recurse, 0, 0);
  return verts;
}

std::vector<std::vector<double>> irredundant_v_vertices(const std::vector<std::vector<double>>& vertices) {
  // Dedup up to sign first.
  std::vector<std::vector<double>> uniq;
  for (const auto& v : vertices) {
    bool dup = false;
    for (const auto& w : uniq) {
      double d1 = 0.0, d2 = 0.0;
      for (std::size_t c = 0; c < v.size(); ++c) {
        d1 = std::max(d1, std::abs(w[c] - v[c]));
        d2 = std::max(d2, std::abs(w[c] + v[c]));
      }
      if (d1 < 1e-10 || d2 < 1e-10) {
        dup = true;
        break;
      }
    }
    if (!dup) uniq.push_back(v);
  }
  // Keep v iff it lies outside the hull of the others (gauge > 1).
  std::vector<std::vector<double>> kept;
  for (std::size_t j = 0; j < uniq.size(); ++j) {
    std::vector<std::vector<double>> others;
    for (std::size_t k = 0; k < uniq.size(); ++k)
      if (k != j) others.push_back(uniq[k]);
    double g;
    if (others.empty()) {
      g = std::numeric_limits<double>::infinity();
    } else {
      g = symmetric_hull_gauge(others, uniq[j]);
    }
    if (g > 1.0 + 1e-9) kept.push_back(uniq[j]);
  }
  return kept;
}

}  // namespace

template <Scalar T>
struct NormSpec<T>::Impl {
  int dim = 0;
  Variant variant;

  // Ellipsoid factors.
  Matrix<T> gram_sqrt;
  Matrix<T> gram_inv_sqrt;

  // Polytope extreme points (signed), built lazily.
  mutable std::once_flag extreme_once;
  mutable std::vector<std::vector<double>> extreme_points;

  const std::vector<std::vector<double>>& extremes() const {
    std::call_once(extreme_once, [this] {
      if (const auto* h = std::get_if<PolytopeHBall>(&variant)) {
        extreme_points = enumerate_h_vertices(h->functionals, dim);
      } else if (const auto* v = std::get_if<PolytopeVBall>(&variant)) {
        auto kept = irredundant_v_vertices(v->vertices);
        for (const auto& x : kept) {
          extreme_points.push_back(x);
          std::vector<double> neg(x);
          for (auto& c : neg) c = -c;
          extreme_points.push_back(neg);
        }
      }
    });
    return extreme_points;
  }
};

template <Scalar T>
NormSpec<T>::NormSpec(int dim, Variant variant) {
  if (dim < 1) throw SchemaError("NormSpec: dimension must be positive");
  auto impl = std::make_shared<Impl>();
  impl->dim = dim;
  impl->variant = std::move(variant);

  if (const auto* lp = std::get_if<LpBall>(&impl->variant)) {
    if (!(lp->p >= 1.0)) throw SchemaError("NormSpec: lp exponent must satisfy p >= 1");
  } else if (const auto* el = std::get_if<EllipsoidBall<T>>(&impl->variant)) {
    if (el->gram.rows() != dim || el->gram.cols() != dim)
      throw DimensionMismatch("NormSpec: ellipsoid matrix dimension mismatch");
    if (!el->gram.is_hermitian(1e-10)) throw NotHermitian("NormSpec: ellipsoid matrix not Hermitian");
    const EigResult<T> e = sym_eig(el->gram);
    if (e.values.back() < 1e-10 * e.values.front() || e.values.front() <= 0.0)
      throw NotPositiveDefinite("NormSpec: ellipsoid matrix must be positive definite");
    impl->gram_sqrt = psd_sqrt(el->gram);
    impl->gram_inv_sqrt = inverse(impl->gram_sqrt);
  } else if (const auto* h = std::get_if<PolytopeHBall>(&impl->variant)) {
    if constexpr (is_complex_v<T>) {
      throw Unsupported("NormSpec: polytope norms are real-field only");
    } else {
      if (h->functionals.empty()) throw SchemaError("NormSpec: polytopeH needs at least one functional");
      const Matrix<double> f = stack_rows(h->functionals, dim);
      const SvdResult<double> fd = svd(f);
      if (f.rows() < dim || fd.singular_values.back() <= 1e-10 * fd.singular_values.front())
        throw SchemaError("NormSpec: polytopeH functionals do not span, norm is degenerate");
      // Reject near-degenerate balls: extent of the ball along a coordinate
      // axis is the dual norm of e_i, an LP over conv{ +/- a_j }.
      for (int i = 0; i < dim; ++i) {
        const Vec<double> e = unit_vector<double>(dim, i);
        const double extent = symmetric_hull_gauge(h->functionals, e);
        if (!(extent <= 1e6)) throw SchemaError("NormSpec: polytopeH ball extent exceeds 1e6, near-degenerate");
      }
    }
  } else if (const auto* v = std::get_if<PolytopeVBall>(&impl->variant)) {
    if constexpr (is_complex_v<T>) {
      throw Unsupported("NormSpec: polytope norms are real-field only");
    } else {
      if (v->vertices.empty()) throw SchemaError("NormSpec: polytopeV needs at least one vertex");
      const Matrix<double> m = stack_rows(v->vertices, dim);
      const SvdResult<double> md = svd(m);
      if (m.rows() < dim || md.singular_values.back() <= 1e-10 * md.singular_values.front())
        throw SchemaError("NormSpec: polytopeV vertices do not span, gauge is not a norm");
    }
  }

  impl_ = std::move(impl);
}

template <Scalar T>
int NormSpec<T>::dim() const {
  return impl_->dim;
}

template <Scalar T>
const typename NormSpec<T>::Variant& NormSpec<T>::variant() const {
  return impl_->variant;
}

template <Scalar T>
const Matrix<T>& NormSpec<T>::gram_sqrt() const {
  if (!std::holds_alternative<EllipsoidBall<T>>(impl_->variant))
    throw Unsupported("gram_sqrt: not an ellipsoid norm");
  return impl_->gram_sqrt;
}

template <Scalar T>
const Matrix<T>& NormSpec<T>::gram_inv_sqrt() const {
  if (!std::holds_alternative<EllipsoidBall<T>>(impl_->variant))
    throw Unsupported("gram_inv_sqrt: not an ellipsoid norm");
  return impl_->gram_inv_sqrt;
}

template <Scalar T>
const std::vector<std::vector<double>>& NormSpec<T>::polytope_extreme_points() const {
  if (!is_polytope()) throw Unsupported("polytope_extreme_points: not a polytope norm");
  return impl_->extremes();
}

template <Scalar T>
std::pair<double, double> NormSpec<T>::l2_equivalence_bounds() const {
  const int n = impl_->dim;
  if (const auto* lp = std::get_if<LpBall>(&impl_->variant)) {
    const double p = lp->p;
    if (p == kPInf) return {1.0 / std::sqrt(static_cast<double>(n)), 1.0};
    const double ex = 1.0 / p - 0.5;
    const double np = std::pow(static_cast<double>(n), std::abs(ex));
    if (p <= 2.0) return {1.0, np};
    return {1.0 / np, 1.0};
  }
  if (const auto* el = std::get_if<EllipsoidBall<T>>(&impl_->variant)) {
    const EigResult<T> e = sym_eig(el->gram);
    return {std::sqrt(std::max(e.values.back(), 0.0)), std::sqrt(e.values.front())};
  }
  if (const auto* h = std::get_if<PolytopeHBall>(&impl_->variant)) {
    const Matrix<double> f = stack_rows(h->functionals, n);
    const SvdResult<double> d = svd(f);
    double max_row = 0.0;
    for (const auto& a : h->functionals) {
      double s = 0.0;
      for (double c : a) s += c * c;
      max_row = std::max(max_row, std::sqrt(s));
    }
    const double m = static_cast<double>(h->functionals.size());
    return {d.singular_values.back() / std::sqrt(m), max_row};
  }
  const auto* v = std::get_if<PolytopeVBall>(&impl_->variant);
  const Matrix<double> vm = stack_rows(v->vertices, n).transpose();  // n x m
  const SvdResult<double> d = svd(vm);
  double max_vert = 0.0;
  for (const auto& vert : v->vertices) {
    double s = 0.0;
    for (double c : vert) s += c * c;
    max_vert = std::max(max_vert, std::sqrt(s));
  }
  const double m = static_cast<double>(v->vertices.size());
  double smin = 0.0;
  for (double s : d.singular_values)
    if (s > 0.0) smin = s;  // smallest positive = sigma_n since vertices span
  return {1.0 / max_vert, std::sqrt(m) / smin};
}

template class NormSpec<double>;
template class NormSpec<std::complex<double>>;

}  // namespace normgeom
