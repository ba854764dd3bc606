#pragma once

#include <limits>
#include <memory>
#include <variant>
#include <vector>

#include "normgeom/eig.hpp"
#include "normgeom/matrix.hpp"

namespace normgeom {

inline constexpr double kPInf = std::numeric_limits<double>::infinity();

struct LpBall {
  double p;  // in [1, inf]
};

// norm(x)^2 = x* gram x, gram Hermitian positive definite.
template <Scalar T>
struct EllipsoidBall {
  Matrix<T> gram;
};

// norm(x) = max_i |<a_i, x>|. Real field only.
struct PolytopeHBall {
  std::vector<std::vector<double>> functionals;
};

// Unit ball = conv{ +/- v_j }. Real field only.
struct PolytopeVBall {
  std::vector<std::vector<double>> vertices;
};

// Immutable description of a norm on K^n. Copies are cheap handles onto a
// shared implementation; derived data (ellipsoid factors, polytope extreme
// points) is cached there, so concurrent use is safe.
template <Scalar T>
class NormSpec {
 public:
  using Variant = std::variant<LpBall, EllipsoidBall<T>, PolytopeHBall, PolytopeVBall>;

  NormSpec(int dim, Variant variant);

  static NormSpec lp(int dim, double p) { return NormSpec(dim, LpBall{p}); }
  static NormSpec euclidean(int dim) { return NormSpec(dim, LpBall{2.0}); }
  static NormSpec ellipsoid(Matrix<T> gram) {
    const int n = gram.rows();
    return NormSpec(n, EllipsoidBall<T>{std::move(gram)});
  }

  int dim() const;
  const Variant& variant() const;

  bool is_lp() const { return std::holds_alternative<LpBall>(variant()); }
  bool is_polytope() const {
    return std::holds_alternative<PolytopeHBall>(variant()) || std::holds_alternative<PolytopeVBall>(variant());
  }
  // p if the variant is Lp, else 0.
  double lp_exponent() const {
    if (const auto* lp = std::get_if<LpBall>(&variant())) return lp->p;
    return 0.0;
  }

  // Ellipsoid factors (only valid for the Ellipsoid variant).
  const Matrix<T>& gram_sqrt() const;      // B with B^2 = gram
  const Matrix<T>& gram_inv_sqrt() const;  // B^{-1}

  // lo * |x|_2 <= norm(x) <= hi * |x|_2, from the exact per-family constants.
  std::pair<double, double> l2_equivalence_bounds() const;

  // Signed extreme points of a polytope ball, enumerated once and cached.
  // Throws Unsupported for non-polytope variants.
  const std::vector<std::vector<double>>& polytope_extreme_points() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

extern template class NormSpec<double>;
extern template class NormSpec<std::complex<double>>;

}  // namespace normgeom
