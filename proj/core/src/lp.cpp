#include "normgeom/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace normgeom {

namespace {

constexpr double kReducedCostTol = 1e-10;
constexpr double kPivotTol = 1e-11;
constexpr int kMaxPivots = 200000;

struct Tableau {
  // rows x (num_vars + 1); last column is the rhs, kept nonnegative.
  std::vector<std::vector<double>> t;
  std::vector<int> basis;  // basis[i] = variable index of row i
  int num_vars = 0;

  double rhs(int i) const { return t[i].back(); }
};

// One Bland-rule simplex phase for min cost.z on the canonical tableau.
// `allowed(j)` gates entering candidates. Returns false on unboundedness.
bool run_simplex(Tableau& tab, const std::vector<double>& cost, const std::vector<bool>& allowed) {
  const int m = static_cast<int>(tab.t.size());
  const int n = tab.num_vars;
  for (int pivots = 0; pivots < kMaxPivots; ++pivots) {
    // Reduced costs r_j = c_j - c_B . column_j, computed fresh; the tableau
    // stays canonical so basis columns give r = 0 automatically.
    int enter = -1;
    for (int j = 0; j < n; ++j) {
      if (!allowed[j]) continue;
      double r = cost[j];
      for (int i = 0; i < m; ++i) {
        const double cb = cost[tab.basis[i]];
        if (cb != 0.0) r -= cb * tab.t[i][j];
      }
      if (r < -kReducedCostTol) {
        enter = j;  // Bland: smallest improving index
        break;
      }
    }
    if (enter < 0) return true;  // optimal

    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      const double a = tab.t[i][enter];
      if (a > kPivotTol) {
        const double ratio = tab.rhs(i) / a;
        if (ratio < best_ratio - 1e-13 ||
            (ratio < best_ratio + 1e-13 && (leave < 0 || tab.basis[i] < tab.basis[leave]))) {
          best_ratio = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) return false;  // unbounded direction

    // Pivot on (leave, enter).
    auto& prow = tab.t[leave];
    const double piv = prow[enter];
    for (auto& v : prow) v /= piv;
    prow[enter] = 1.0;
    for (int i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double f = tab.t[i][enter];
      if (f == 0.0) continue;
      for (int j = 0; j <= n; ++j) tab.t[i][j] -= f * prow[j];
      tab.t[i][enter] = 0.0;
    }
    tab.basis[leave] = enter;
  }
  throw Error("simplex: pivot limit reached");
}

double objective_value(const Tableau& tab, const std::vector<double>& cost) {
  double v = 0.0;
  for (std::size_t i = 0; i < tab.basis.size(); ++i) v += cost[tab.basis[i]] * tab.rhs(static_cast<int>(i));
  return v;
}

}  // namespace

StandardLpSolution solve_standard_lp(const StandardLp& p) {
  const int m = static_cast<int>(p.eq_lhs.size());
  const int k = static_cast<int>(p.cost.size());
  for (const auto& row : p.eq_lhs)
    if (static_cast<int>(row.size()) != k) throw DimensionMismatch("solve_standard_lp: ragged constraint row");
  if (static_cast<int>(p.eq_rhs.size()) != m) throw DimensionMismatch("solve_standard_lp: rhs size");

  double rhs_scale = 1.0;
  for (double b : p.eq_rhs) rhs_scale = std::max(rhs_scale, std::abs(b));

  // Columns: [original k vars][m artificials][rhs]; rows sign-fixed so rhs >= 0.
  Tableau tab;
  tab.num_vars = k + m;
  tab.t.assign(m, std::vector<double>(k + m + 1, 0.0));
  tab.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    const double sgn = p.eq_rhs[i] < 0.0 ? -1.0 : 1.0;
    for (int j = 0; j < k; ++j) tab.t[i][j] = sgn * p.eq_lhs[i][j];
    tab.t[i][k + i] = 1.0;
    tab.t[i].back() = sgn * p.eq_rhs[i];
    tab.basis[i] = k + i;
  }

  // Phase 1.
  std::vector<double> cost1(k + m, 0.0);
  for (int i = 0; i < m; ++i) cost1[k + i] = 1.0;
  std::vector<bool> allowed(k + m, true);
  if (!run_simplex(tab, cost1, allowed)) throw Error("solve_standard_lp: phase 1 unbounded");
  if (objective_value(tab, cost1) > 1e-8 * (1.0 + rhs_scale)) throw Infeasible("solve_standard_lp: infeasible");

  // Drive remaining artificials out of the basis, dropping redundant rows.
  for (int i = static_cast<int>(tab.basis.size()) - 1; i >= 0; --i) {
    if (tab.basis[i] < k) continue;
    int enter = -1;
    for (int j = 0; j < k; ++j)
      if (std::abs(tab.t[i][j]) > kPivotTol) {
        enter = j;
        break;
      }
    if (enter < 0) {
      tab.t.erase(tab.t.begin() + i);
      tab.basis.erase(tab.basis.begin() + i);
      continue;
    }
    auto& prow = tab.t[i];
    const double piv = prow[enter];
    for (auto& v : prow) v /= piv;
    for (std::size_t r = 0; r < tab.t.size(); ++r) {
      if (static_cast<int>(r) == i) continue;
      const double f = tab.t[r][enter];
      if (f == 0.0) continue;
      for (int j = 0; j <= tab.num_vars; ++j) tab.t[r][j] -= f * prow[j];
    }
    tab.basis[i] = enter;
  }

  // Phase 2: artificial columns are frozen out.
  std::vector<double> cost2(k + m, 0.0);
  for (int j = 0; j < k; ++j) cost2[j] = p.cost[j];
  for (int j = k; j < k + m; ++j) allowed[j] = false;
  if (!run_simplex(tab, cost2, allowed)) throw Unbounded("solve_standard_lp: unbounded");

  StandardLpSolution sol;
  sol.z.assign(k, 0.0);
  for (std::size_t i = 0; i < tab.basis.size(); ++i)
    if (tab.basis[i] < k) sol.z[tab.basis[i]] = tab.rhs(static_cast<int>(i));
  sol.value = 0.0;
  for (int j = 0; j < k; ++j) sol.value += p.cost[j] * sol.z[j];
  return sol;
}

LpSolution solve_lp(const LpProblem& p) {
  const int k = static_cast<int>(p.objective.size());
  const int m = static_cast<int>(p.lhs.size());
  if (static_cast<int>(p.rhs.size()) != m) throw DimensionMismatch("solve_lp: rhs size");

  // x = u - w with u, w >= 0, slacks s >= 0: lhs (u - w) + s = rhs.
  StandardLp std_lp;
  std_lp.cost.assign(2 * k + m, 0.0);
  for (int j = 0; j < k; ++j) {
    std_lp.cost[j] = -p.objective[j];
    std_lp.cost[k + j] = p.objective[j];
  }
  std_lp.eq_lhs.assign(m, std::vector<double>(2 * k + m, 0.0));
  std_lp.eq_rhs = p.rhs;
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(p.lhs[i].size()) != k) throw DimensionMismatch("solve_lp: ragged constraint row");
    for (int j = 0; j < k; ++j) {
      std_lp.eq_lhs[i][j] = p.lhs[i][j];
      std_lp.eq_lhs[i][k + j] = -p.lhs[i][j];
    }
    std_lp.eq_lhs[i][2 * k + i] = 1.0;
  }

  const StandardLpSolution s = solve_standard_lp(std_lp);
  LpSolution sol;
  sol.x.assign(k, 0.0);
  for (int j = 0; j < k; ++j) sol.x[j] = s.z[j] - s.z[k + j];
  sol.value = -s.value;
  return sol;
}

}  // namespace normgeom
