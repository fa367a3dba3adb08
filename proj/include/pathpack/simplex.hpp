#pragma once

#include <map>
#include <vector>

#include "pathpack/rational.hpp"

namespace pathpack {

enum class Rel { le, ge, eq };

struct LpRow {
  std::map<int, Rat> coeff;
  Rel rel = Rel::le;
  Rat rhs;
};

// maximize objective · x  subject to rows,  x >= 0.
struct LpProblem {
  std::vector<Rat> objective;
  std::vector<LpRow> rows;

  int add_var(const Rat& obj_coeff) {
    objective.push_back(obj_coeff);
    return (int)objective.size() - 1;
  }
  void add_row(LpRow row) { rows.push_back(std::move(row)); }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rat value;
  std::vector<Rat> x;
  std::vector<Rat> dual;  // one multiplier per original row
};

// Two-phase dense tableau simplex over exact rationals with Bland's rule.
// Optimal results are self-certified: the primal point and the dual
// multipliers are re-verified exactly before returning.
LpSolution solve_lp(const LpProblem& lp);

}  // namespace pathpack
