#include "normgeom/norm_ops.hpp"

#include <algorithm>
#include <cmath>

#include "normgeom/errors.hpp"
#include "normgeom/lp.hpp"

namespace normgeom {

namespace {

template <Scalar T>
void check_dim(const NormSpec<T>& spec, std::span<const T> x, const char* who) {
  if (static_cast<int>(x.size()) != spec.dim())
    throw DimensionMismatch(std::string(who) + ": vector dimension mismatch");
}

double lp_norm_abs(std::span<const double> mods, double p) {
  if (p == kPInf) {
    double m = 0.0;
    for (double v : mods) m = std::max(m, v);
    return m;
  }
  if (p == 1.0) {
    double s = 0.0;
    for (double v : mods) s += v;
    return s;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (double v : mods) s += v * v;
    return std::sqrt(s);
  }
  // Scale out the max to avoid overflow for large p.
  double m = 0.0;
  for (double v : mods) m = std::max(m, v);
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double v : mods) s += std::pow(v / m, p);
  return m * std::pow(s, 1.0 / p);
}

double conjugate_exponent(double p) {
  if (p == 1.0) return kPInf;
  if (p == kPInf) return 1.0;
  return p / (p - 1.0);
}

template <Scalar T>
std::vector<double> moduli(std::span<const T> x) {
  std::vector<double> m(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) m[i] = abs_of(x[i]);
  return m;
}

// Real inner product of a real functional row with a (real) vector.
double pair_real(const std::vector<double>& a, std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i] - 1e-14) return true;
    if (a[i] > b[i] + 1e-14) return false;
  }
  return false;
}

template <Scalar T>
bool lex_less_scalar(const Vec<T>& a, const Vec<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ar = real_of(a[i]), br = real_of(b[i]);
    if (ar < br - 1e-14) return true;
    if (ar > br + 1e-14) return false;
    const double ai = imag_of(a[i]), bi = imag_of(b[i]);
    if (ai < bi - 1e-14) return true;
    if (ai > bi + 1e-14) return false;
  }
  return false;
}

}  // namespace

double symmetric_hull_gauge(const std::vector<std::vector<double>>& points, std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  const int m = static_cast<int>(points.size());
  // min sum(l+ + l-)  s.t.  P (l+ - l-) = x,  l+, l- >= 0.
  StandardLp lp;
  lp.cost.assign(2 * m, 1.0);
  lp.eq_lhs.assign(n, std::vector<double>(2 * m, 0.0));
  lp.eq_rhs.assign(x.begin(), x.end());
  for (int j = 0; j < m; ++j) {
    if (static_cast<int>(points[j].size()) != n) throw DimensionMismatch("symmetric_hull_gauge: point dimension");
    for (int i = 0; i < n; ++i) {
      lp.eq_lhs[i][j] = points[j][i];
      lp.eq_lhs[i][m + j] = -points[j][i];
    }
  }
  try {
    return solve_standard_lp(lp).value;
  } catch (const Infeasible&) {
    return std::numeric_limits<double>::infinity();
  }
}

template <Scalar T>
double norm_eval(const NormSpec<T>& spec, std::span<const T> x) {
  check_dim(spec, x, "norm_eval");
  return std::visit(
      [&](const auto& ball) -> double {
        using B = std::decay_t<decltype(ball)>;
        if constexpr (std::is_same_v<B, LpBall>) {
          const auto mods = moduli(x);
          return lp_norm_abs(mods, ball.p);
        } else if constexpr (std::is_same_v<B, EllipsoidBall<T>>) {
          return norm2<T>(spec.gram_sqrt().apply(x));
        } else if constexpr (std::is_same_v<B, PolytopeHBall>) {
          if constexpr (is_complex_v<T>) {
            throw Unsupported("norm_eval: polytope norms are real-field only");
          } else {
            double best = 0.0;
            for (const auto& a : ball.functionals) best = std::max(best, std::abs(pair_real(a, x)));
            return best;
          }
        } else {
          if constexpr (is_complex_v<T>) {
            throw Unsupported("norm_eval: polytope norms are real-field only");
          } else {
            return symmetric_hull_gauge(ball.vertices, x);
          }
        }
      },
      spec.variant());
}

template <Scalar T>
double dual_norm_eval(const NormSpec<T>& spec, std::span<const T> y) {
  check_dim(spec, y, "dual_norm_eval");
  return std::visit(
      [&](const auto& ball) -> double {
        using B = std::decay_t<decltype(ball)>;
        if constexpr (std::is_same_v<B, LpBall>) {
          const auto mods = moduli(y);
          return lp_norm_abs(mods, conjugate_exponent(ball.p));
        } else if constexpr (std::is_same_v<B, EllipsoidBall<T>>) {
          return norm2<T>(spec.gram_inv_sqrt().apply(y));
        } else if constexpr (std::is_same_v<B, PolytopeHBall>) {
          if constexpr (is_complex_v<T>) {
            throw Unsupported("dual_norm_eval: polytope norms are real-field only");
          } else {
            // Dual ball of an H-polytope norm is conv{ +/- a_i }.
            return symmetric_hull_gauge(ball.functionals, y);
          }
        } else {
          if constexpr (is_complex_v<T>) {
            throw Unsupported("dual_norm_eval: polytope norms are real-field only");
          } else {
            double best = 0.0;
            for (const auto& v : ball.vertices) best = std::max(best, std::abs(pair_real(v, y)));
            return best;
          }
        }
      },
      spec.variant());
}

template <Scalar T>
DualFunctional<T> dual_norming_functional(const NormSpec<T>& spec, std::span<const T> x) {
  check_dim(spec, x, "dual_norming_functional");
  const double nx = norm_eval(spec, x);
  if (nx <= 0.0) throw ZeroVector("dual_norming_functional: zero vector");

  return std::visit(
      [&](const auto& ball) -> DualFunctional<T> {
        using B = std::decay_t<decltype(ball)>;
        if constexpr (std::is_same_v<B, LpBall>) {
          const double p = ball.p;
          const int n = spec.dim();
          if (p == kPInf) {
            // Active coordinates tie-break to the lexicographically smallest
            // signed coordinate functional.
            std::vector<Vec<T>> candidates;
            for (int i = 0; i < n; ++i)
              if (abs_of(x[i]) >= nx * (1.0 - 1e-12)) {
                Vec<T> e(n, T(0));
                e[i] = phase_of(x[i]);
                candidates.push_back(std::move(e));
              }
            Vec<T> best = candidates.front();
            for (const auto& c : candidates)
              if (lex_less_scalar<T>(c, best)) best = c;
            return {best, real_of(dot<T>(x, best))};
          }
          if (p == 1.0) {
            Vec<T> y(n, T(0));
            const double floor = 1e-14 * nx;
            for (int i = 0; i < n; ++i)
              if (abs_of(x[i]) > floor) y[i] = phase_of(x[i]);
            return {y, real_of(dot<T>(x, y))};
          }
          // Smooth case: the duality map.
          Vec<T> y(n, T(0));
          const double denom = std::pow(nx, p - 1.0);
          for (int i = 0; i < n; ++i) {
            const double a = abs_of(x[i]);
            if (a > 0.0) y[i] = phase_of(x[i]) * T(std::pow(a, p - 1.0) / denom);
          }
          return {y, real_of(dot<T>(x, y))};
        } else if constexpr (std::is_same_v<B, EllipsoidBall<T>>) {
          Vec<T> y = ball.gram.apply(x);
          for (auto& v : y) v *= T(1.0 / nx);
          return {y, real_of(dot<T>(x, y))};
        } else if constexpr (std::is_same_v<B, PolytopeHBall>) {
          if constexpr (is_complex_v<T>) {
            throw Unsupported("dual_norming_functional: polytope norms are real-field only");
          } else {
            std::vector<std::vector<double>> candidates;
            for (const auto& a : ball.functionals) {
              const double v = pair_real(a, x);
              if (std::abs(v) >= nx * (1.0 - 1e-12)) {
                std::vector<double> signed_a(a);
                const double s = v < 0.0 ? -1.0 : 1.0;
                for (auto& c : signed_a) c *= s;
                candidates.push_back(std::move(signed_a));
              }
            }
            std::vector<double> best = candidates.front();
            for (const auto& c : candidates)
              if (lex_less(c, best)) best = c;
            return {best, pair_real(best, x)};
          }
        } else {
          if constexpr (is_complex_v<T>) {
            throw Unsupported("dual_norming_functional: polytope norms are real-field only");
          } else {
            // Dual LP: maximize <x, y> over the dual ball {|<v_j, y>| <= 1}.
            LpProblem lp;
            lp.objective.assign(x.begin(), x.end());
            for (const auto& v : ball.vertices) {
              lp.lhs.push_back(v);
              lp.rhs.push_back(1.0);
              std::vector<double> neg(v);
              for (auto& c : neg) c = -c;
              lp.lhs.push_back(std::move(neg));
              lp.rhs.push_back(1.0);
            }
            const LpSolution sol = solve_lp(lp);
            return {sol.x, sol.value};
          }
        }
      },
      spec.variant());
}

template <Scalar T>
std::vector<Vec<T>> ball_extreme_points(const NormSpec<T>& spec) {
  const int n = spec.dim();
  return std::visit(
      [&](const auto& ball) -> std::vector<Vec<T>> {
        using B = std::decay_t<decltype(ball)>;
        if constexpr (std::is_same_v<B, LpBall>) {
          if (ball.p == 1.0) {
            std::vector<Vec<T>> pts;
            for (int i = 0; i < n; ++i) {
              pts.push_back(unit_vector<T>(n, i));
              if constexpr (!is_complex_v<T>) {
                Vec<T> neg = unit_vector<T>(n, i);
                neg[i] = T(-1);
                pts.push_back(std::move(neg));
              }
            }
            return pts;
          }
          if (ball.p == kPInf) {
            if constexpr (is_complex_v<T>) {
              throw Unsupported("ball_extreme_points: complex l-inf ball has a continuum of extreme points");
            } else {
              std::vector<Vec<T>> pts;
              const unsigned count = 1u << n;
              for (unsigned mask = 0; mask < count; ++mask) {
                Vec<T> v(n);
                for (int i = 0; i < n; ++i) v[i] = ((mask >> i) & 1u) ? -1.0 : 1.0;
                pts.push_back(std::move(v));
              }
              return pts;
            }
          }
          throw Unsupported("ball_extreme_points: smooth lp ball");
        } else if constexpr (std::is_same_v<B, EllipsoidBall<T>>) {
          throw Unsupported("ball_extreme_points: ellipsoid ball is smooth");
        } else if constexpr (std::is_same_v<B, PolytopeHBall>) {
          if constexpr (is_complex_v<T>) {
            throw Unsupported("ball_extreme_points: polytope norms are real-field only");
          } else {
            if (n > 4 || static_cast<int>(ball.functionals.size()) > 64)
              throw Unsupported("ball_extreme_points: polytopeH enumeration supported for n <= 4, m <= 64");
            return spec.polytope_extreme_points();
          }
        } else {
          if constexpr (is_complex_v<T>) {
            throw Unsupported("ball_extreme_points: polytope norms are real-field only");
          } else {
            return spec.polytope_extreme_points();
          }
        }
      },
      spec.variant());
}

template double norm_eval(const NormSpec<double>&, std::span<const double>);
template double norm_eval(const NormSpec<std::complex<double>>&, std::span<const std::complex<double>>);
template double dual_norm_eval(const NormSpec<double>&, std::span<const double>);
template double dual_norm_eval(const NormSpec<std::complex<double>>&, std::span<const std::complex<double>>);
template DualFunctional<double> dual_norming_functional(const NormSpec<double>&, std::span<const double>);
template DualFunctional<std::complex<double>> dual_norming_functional(const NormSpec<std::complex<double>>&, std::span<const std::complex<double>>);
template std::vector<Vec<double>> ball_extreme_points(const NormSpec<double>&);
template std::vector<Vec<std::complex<double>>> ball_extreme_points(const NormSpec<std::complex<double>>&);

}  // namespace normgeom
