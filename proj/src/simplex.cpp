#include "pathpack/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathpack {

namespace {

struct UnboundedLp {};

struct Tableau {
  int m = 0;       // constraint rows
  int ncols = 0;   // structural + slack + artificial columns
  std::vector<std::vector<Rat>> a;  // m rows of ncols coefficients
  std::vector<Rat> rhs;             // length m, kept >= 0
  std::vector<int> basis;           // basic column per row
  std::vector<Rat> d;               // reduced costs c_j - c_B B^-1 a_j
  Rat value;                        // c_B B^-1 b

  void pivot(int row, int col) {
    Rat p = a[row][col];
    for (int j = 0; j < ncols; ++j) a[row][j] /= p;
    rhs[row] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      Rat factor = a[i][col];
      for (int j = 0; j < ncols; ++j)
        if (!a[row][j].is_zero()) a[i][j] -= factor * a[row][j];
      rhs[i] -= factor * rhs[row];
    }
    if (!d[col].is_zero()) {
      Rat factor = d[col];
      for (int j = 0; j < ncols; ++j)
        if (!a[row][j].is_zero()) d[j] -= factor * a[row][j];
      value += factor * rhs[row];
    }
    basis[row] = col;
  }

  // Bland's rule; `allowed` masks columns that may enter.
  // Returns false when optimal, throws UnboundedLp otherwise.
  bool step(const std::vector<bool>& allowed) {
    int enter = -1;
    for (int j = 0; j < ncols; ++j)
      if (allowed[j] && d[j] > Rat(0)) {
        enter = j;
        break;
      }
    if (enter < 0) return false;
    int leave = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      if (a[i][enter] > Rat(0)) {
        Rat ratio = rhs[i] / a[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) throw UnboundedLp{};
    pivot(leave, enter);
    return true;
  }

  void set_objective(const std::vector<Rat>& c) {
    d = c;
    d.resize(ncols, Rat(0));
    value = Rat(0);
    for (int i = 0; i < m; ++i) {
      Rat cb = basis[i] < (int)c.size() ? c[basis[i]] : Rat(0);
      if (cb.is_zero()) continue;
      for (int j = 0; j < ncols; ++j)
        if (!a[i][j].is_zero()) d[j] -= cb * a[i][j];
      value += cb * rhs[i];
    }
  }
};

void verify_certificate(const LpProblem& lp, const LpSolution& sol) {
  int n = (int)lp.objective.size();
  // primal feasibility
  for (const auto& xi : sol.x)
    if (xi.is_negative()) throw std::logic_error("lp: negative primal variable");
  for (const auto& row : lp.rows) {
    Rat lhs;
    for (const auto& [j, cj] : row.coeff) lhs += cj * sol.x[(size_t)j];
    bool ok = row.rel == Rel::le   ? lhs <= row.rhs
              : row.rel == Rel::ge ? lhs >= row.rhs
                                   : lhs == row.rhs;
    if (!ok) throw std::logic_error("lp: primal infeasible");
  }
  // dual feasibility: sign per row type, A^T y >= c
  for (size_t i = 0; i < lp.rows.size(); ++i) {
    if (lp.rows[i].rel == Rel::le && sol.dual[i].is_negative())
      throw std::logic_error("lp: dual sign violated on <= row");
    if (lp.rows[i].rel == Rel::ge && sol.dual[i] > Rat(0))
      throw std::logic_error("lp: dual sign violated on >= row");
  }
  std::vector<Rat> aty((size_t)n);
  for (size_t i = 0; i < lp.rows.size(); ++i)
    for (const auto& [j, cj] : lp.rows[i].coeff) aty[(size_t)j] += sol.dual[i] * cj;
  for (int j = 0; j < n; ++j)
    if (aty[(size_t)j] < lp.objective[(size_t)j])
      throw std::logic_error("lp: dual infeasible");
  // strong duality
  Rat primal, dual_val;
  for (int j = 0; j < n; ++j) primal += lp.objective[(size_t)j] * sol.x[(size_t)j];
  for (size_t i = 0; i < lp.rows.size(); ++i) dual_val += sol.dual[i] * lp.rows[i].rhs;
  if (primal != sol.value || dual_val != sol.value)
    throw std::logic_error("lp: objective mismatch");
}

}  // namespace

LpSolution solve_lp(const LpProblem& lp) {
  int n = (int)lp.objective.size();
  int m = (int)lp.rows.size();

  // Normalized copy with rhs >= 0.
  std::vector<LpRow> rows = lp.rows;
  std::vector<int> flipped(m, 1);
  for (int i = 0; i < m; ++i) {
    for (const auto& [j, c] : rows[(size_t)i].coeff)
      if (j < 0 || j >= n) throw Error(errc::invalid_argument, "bad LP column index");
    if (rows[(size_t)i].rhs.is_negative()) {
      flipped[(size_t)i] = -1;
      rows[(size_t)i].rhs = -rows[(size_t)i].rhs;
      for (auto& [j, c] : rows[(size_t)i].coeff) c = -c;
      if (rows[(size_t)i].rel == Rel::le)
        rows[(size_t)i].rel = Rel::ge;
      else if (rows[(size_t)i].rel == Rel::ge)
        rows[(size_t)i].rel = Rel::le;
    }
  }

  // Column layout: structural | one slack/surplus per inequality | artificials.
  std::vector<int> slack_col(m, -1), art_col(m, -1);
  int ncols = n;
  for (int i = 0; i < m; ++i)
    if (rows[(size_t)i].rel != Rel::eq) slack_col[(size_t)i] = ncols++;
  for (int i = 0; i < m; ++i)
    if (rows[(size_t)i].rel != Rel::le) art_col[(size_t)i] = ncols++;

  Tableau t;
  t.m = m;
  t.ncols = ncols;
  t.a.assign((size_t)m, std::vector<Rat>((size_t)ncols));
  t.rhs.resize((size_t)m);
  t.basis.resize((size_t)m);
  for (int i = 0; i < m; ++i) {
    for (const auto& [j, c] : rows[(size_t)i].coeff) t.a[(size_t)i][(size_t)j] = c;
    t.rhs[(size_t)i] = rows[(size_t)i].rhs;
    if (slack_col[(size_t)i] >= 0)
      t.a[(size_t)i][(size_t)slack_col[(size_t)i]] =
          rows[(size_t)i].rel == Rel::le ? Rat(1) : Rat(-1);
    if (art_col[(size_t)i] >= 0) {
      t.a[(size_t)i][(size_t)art_col[(size_t)i]] = Rat(1);
      t.basis[(size_t)i] = art_col[(size_t)i];
    } else {
      t.basis[(size_t)i] = slack_col[(size_t)i];
    }
  }

  std::vector<bool> is_artificial(ncols, false);
  for (int i = 0; i < m; ++i)
    if (art_col[(size_t)i] >= 0) is_artificial[(size_t)art_col[(size_t)i]] = true;

  // Phase 1: maximize -sum(artificials).
  bool any_artificial = false;
  for (int i = 0; i < m; ++i) any_artificial |= art_col[(size_t)i] >= 0;
  if (any_artificial) {
    std::vector<Rat> phase1((size_t)ncols);
    for (int j = 0; j < ncols; ++j)
      if (is_artificial[(size_t)j]) phase1[(size_t)j] = Rat(-1);
    t.set_objective(phase1);
    std::vector<bool> allowed(ncols, true);
    try {
      while (t.step(allowed)) {
      }
    } catch (const UnboundedLp&) {
      throw std::logic_error("lp: phase 1 cannot be unbounded");
    }
    if (t.value != Rat(0)) {
      LpSolution sol;
      sol.status = LpStatus::infeasible;
      return sol;
    }
    // Remove artificials still in the basis at level zero when possible.
    for (int i = 0; i < m; ++i) {
      if (!is_artificial[(size_t)t.basis[(size_t)i]]) continue;
      int col = -1;
      for (int j = 0; j < ncols; ++j)
        if (!is_artificial[(size_t)j] && !t.a[(size_t)i][(size_t)j].is_zero()) {
          col = j;
          break;
        }
      if (col >= 0) t.pivot(i, col);
      // else: the row is redundant; the artificial stays basic at zero.
    }
  }

  // Phase 2.
  t.set_objective(lp.objective);
  std::vector<bool> allowed(ncols, true);
  for (int j = 0; j < ncols; ++j)
    if (is_artificial[(size_t)j]) allowed[(size_t)j] = false;
  try {
    while (t.step(allowed)) {
    }
  } catch (const UnboundedLp&) {
    LpSolution sol;
    sol.status = LpStatus::unbounded;
    return sol;
  }

  LpSolution sol;
  sol.status = LpStatus::optimal;
  sol.value = t.value;
  sol.x.assign((size_t)n, Rat(0));
  for (int i = 0; i < m; ++i)
    if (t.basis[(size_t)i] < n) sol.x[(size_t)t.basis[(size_t)i]] = t.rhs[(size_t)i];

  // y_i is read off the reduced cost of row i's initial unit column, with the
  // orientation flip undone.
  sol.dual.assign((size_t)m, Rat(0));
  for (int i = 0; i < m; ++i) {
    Rat y;
    if (rows[(size_t)i].rel == Rel::le)
      y = -t.d[(size_t)slack_col[(size_t)i]];
    else if (rows[(size_t)i].rel == Rel::ge)
      y = t.d[(size_t)slack_col[(size_t)i]];
    else
      y = -t.d[(size_t)art_col[(size_t)i]];
    sol.dual[(size_t)i] = Rat(flipped[(size_t)i]) * y;
  }

  verify_certificate(lp, sol);
  return sol;
}

}  // namespace pathpack
