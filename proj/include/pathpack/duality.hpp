#pragma once

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "pathpack/demand.hpp"
#include "pathpack/flows.hpp"
#include "pathpack/netmodel.hpp"
#include "pathpack/solve.hpp"

namespace pathpack {

// Disjoint node blocks X_t with X_t ∩ T = {t}, one per terminal. Inner nodes
// not assigned to any block stay inner after contraction.
struct Expansion {
  std::map<NodeId, std::set<NodeId>> blocks;

  bool operator==(const Expansion&) const = default;
  bool is_trivial() const {
    for (const auto& [t, b] : blocks)
      if (b.size() != 1) return false;
    return true;
  }
};

// (|T|+1)^#inner, throwing TooManyExpansions beyond cap.
size_t expansion_count(const Network& net, size_t cap);

void for_each_expansion(const Network& net, size_t cap,
                        const std::function<void(const Expansion&)>& fn);

std::vector<Expansion> enumerate_expansions(const Network& net, size_t cap);

// G_X: every block contracted onto its terminal.
Network compress_expansion(const Network& net, const Expansion& x);

// (1/2) Σ_t d(X_t) − (1/2) Σ_{A∈K} β_{G_X}(A).
Rat dual_value(const Network& net, const Clutter& k, const Expansion& x);

struct DualReport {
  Rat primal_theta;
  Rat min_dual;
  Expansion best;
  bool equality = false;
  bool weak_duality_ok = true;  // dual_value >= theta for every expansion
  size_t expansions_checked = 0;
  std::vector<bool> critical_flags;  // per expansion: dual_value == theta
};

// Scans all expansions, verifying Eq-(13)-style equality of theta and the
// expansion minimum plus weak duality everywhere. Requires a simple clutter
// (compress atoms first).
DualReport verify_maxmin(const Network& net, const Clutter& k,
                         const SolverLimits& limits = {});

struct DualPropertyReport {
  bool saturated = true;
  std::vector<NodePair> unsaturated_edges;  // terminal-incident edges of G_X
  bool blocks_locked = true;
  std::vector<NodeId> unlocked_blocks;
  bool clutter_locked = true;
  std::vector<std::set<NodeId>> unlocked_members;

  bool ok() const { return saturated && blocks_locked && clutter_locked; }
};

// For a dual solution X (dual_value == theta; otherwise NotDualSolution) and
// a flow h in G_X: checks saturation of every (X_t, rest) edge and locking of
// every X_t and every clutter member.
DualPropertyReport dual_solution_properties(const Network& net, const Clutter& k,
                                            const Expansion& x, const Multiflow& h,
                                            const SolverLimits& limits = {});

}  // namespace pathpack
