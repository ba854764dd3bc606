#pragma once

#include <span>
#include <vector>

#include "normgeom/norm_spec.hpp"

namespace normgeom {

template <Scalar T>
double norm_eval(const NormSpec<T>& spec, std::span<const T> x);

// Dual norm under the pairing <x, y> = sum_i x_i conj(y_i):
// max over the unit ball of |<x, y>|. Exact per variant: conjugate exponent
// for Lp, y* gram^{-1} y for ellipsoids, vertex max and gauge LP for the
// polytope pair.
template <Scalar T>
double dual_norm_eval(const NormSpec<T>& spec, std::span<const T> y);

template <Scalar T>
struct DualFunctional {
  Vec<T> y;        // dual-unit functional
  double pairing;  // <x, y> = norm(x), real positive (phase absorbed)
};

// Hahn-Banach functional at x != 0. Polyhedral ties resolve to the
// lexicographically smallest signed active functional; the PolytopeV case
// comes from the dual LP vertex chosen by Bland's rule. Deterministic.
template <Scalar T>
DualFunctional<T> dual_norming_functional(const NormSpec<T>& spec, std::span<const T> x);

// Extreme points of the unit ball, both signs included for real variants.
// Supported: PolytopeV, PolytopeH (n <= 4, m <= 64), Lp with p in {1, inf}
// (complex: l1 only, one representative per phase orbit). Throws Unsupported
// for smooth balls.
template <Scalar T>
std::vector<Vec<T>> ball_extreme_points(const NormSpec<T>& spec);

// Gauge of x in the symmetric convex hull conv{ +/- p_j }: the minimal
// sum of |coefficients| writing x over the p_j. Returns +inf when x is
// outside the span. Real field; this is the PolytopeV norm evaluator and the
// PolytopeH dual evaluator.
double symmetric_hull_gauge(const std::vector<std::vector<double>>& points, std::span<const double> x);

extern template double norm_eval(const NormSpec<double>&, std::span<const double>);
extern template double norm_eval(const NormSpec<std::complex<double>>&, std::span<const std::complex<double>>);
extern template double dual_norm_eval(const NormSpec<double>&, std::span<const double>);
extern template double dual_norm_eval(const NormSpec<std::complex<double>>&, std::span<const std::complex<double>>);
extern template DualFunctional<double> dual_norming_functional(const NormSpec<double>&, std::span<const double>);
extern template DualFunctional<std::complex<double>> dual_norming_functional(const NormSpec<std::complex<double>>&, std::span<const std::complex<double>>);
extern template std::vector<Vec<double>> ball_extreme_points(const NormSpec<double>&);
extern template std::vector<Vec<std::complex<double>>> ball_extreme_points(const NormSpec<std::complex<double>>&);

}  // namespace normgeom
