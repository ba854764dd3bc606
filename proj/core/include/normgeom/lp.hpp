#pragma once

#include <vector>

#include "normgeom/errors.hpp"

namespace normgeom {

// Dense two-phase primal simplex with Bland's rule (no cycling). Real field
// only; polytope norms are restricted to R^n anyway.
//
// Pivoting tolerances (documented contract):
//   reduced-cost entering threshold   1e-10
//   minimum pivot magnitude           1e-11
//   phase-1 infeasibility threshold   1e-8 * (1 + max |rhs|)
// Inputs are assumed well-scaled (|entry| <= 1e6).

// maximize objective . x  subject to  lhs[i] . x <= rhs[i], x free.
struct LpProblem {
  std::vector<double> objective;
  std::vector<std::vector<double>> lhs;
  std::vector<double> rhs;
};

struct LpSolution {
  double value = 0.0;
  std::vector<double> x;
};

// Throws Infeasible or Unbounded.
LpSolution solve_lp(const LpProblem& p);

// Kernel: minimize cost . z  subject to  eq_lhs z = eq_rhs, z >= 0.
struct StandardLp {
  std::vector<std::vector<double>> eq_lhs;
  std::vector<double> eq_rhs;
  std::vector<double> cost;
};

struct StandardLpSolution {
  double value = 0.0;
  std::vector<double> z;
};

StandardLpSolution solve_standard_lp(const StandardLp& p);

}  // namespace normgeom
