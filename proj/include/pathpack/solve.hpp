#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pathpack/demand.hpp"
#include "pathpack/flows.hpp"
#include "pathpack/netmodel.hpp"
#include "pathpack/simplex.hpp"

namespace pathpack {

struct SolverLimits {
  size_t max_paths = 100000;
  long long search_budget = 4000000;  // branch-and-bound node budget
  size_t max_expansions = 2000000;
};

enum class Problem { S, W };

// All node-simple T-paths, deterministically ordered. simple_only drops
// compound paths (those traversing a terminal in their interior).
std::vector<TPath> enumerate_t_paths(const Network& net, bool simple_only,
                                     size_t max_paths = 100000);

struct SolveResult {
  Multiflow flow;
  Rat value;  // theta for the W-problem, f[S] for the S-problem
  Rat size;   // |f|
  std::string mode;
  bool simple_only = false;
};

// Exact LP optimum over the enumerated path polytope.
SolveResult solve_fractional(const Network& net, const Clutter& k, Problem problem,
                             bool simple_only, const SolverLimits& limits = {});

// Exact optimum over flows with weights in (1/D)·N, by depth-first
// branch-and-bound with LP bounds. Used as the oracle everywhere.
SolveResult solve_scaled_integer(const Network& net, const Clutter& k,
                                 Problem problem, long long D, bool simple_only,
                                 const SolverLimits& limits = {});

// Half-integer simple W-solution of smallest size (lexicographic: maximize
// theta over simple paths at D = 2, then minimize |f|). Throws
// HalfIntegerGapDetected if its theta or its minimum size disagrees with the
// fractional LP — that would falsify the half-integrality theorem.
SolveResult min_size_w_solution(const Network& net, const Clutter& k,
                                const SolverLimits& limits = {});

struct LovaszCherkasskyReport {
  Rat bound;    // sum of lambda(t) / 2
  Rat lp_max;   // max |f| over fractional T-flows
  bool eulerian = false;
  bool equal = false;
  Multiflow flow;
};

LovaszCherkasskyReport lovasz_cherkassky_value(const Network& net,
                                               const SolverLimits& limits = {});

// Lexicographic search at D = 2 over all node-simple paths: maximize theta,
// minimize |f|, then maximize f[S]. Asserts theta equals the fractional
// optimum and f[S] equals the fractional S-optimum; a violation throws
// CommonSolutionGapDetected (a falsifier of the common-solution theorem).
SolveResult common_solution_search(const Network& net, const Clutter& k,
                                   const SolverLimits& limits = {});

// Reward of a path under the problem's metric.
Rat path_reward(const Network& net, const Clutter& k, Problem problem, const TPath& p);

// Lexicographic LP: maximize |f|, then total edge usage. Produces maximum
// multiflows that saturate as much capacity as possible (the setting of the
// augmenting-sequence equivalence).
SolveResult max_size_flow(const Network& net, const SolverLimits& limits = {});

// Lexicographic LP: maximize theta, then |f|. A maximum multiflow attaining
// theta exists; this finds one.
SolveResult max_theta_max_size_flow(const Network& net, const Clutter& k,
                                    const SolverLimits& limits = {});

// Lexicographic solve in the requested mode: optimal value first, then least
// |f|. scale == 0 selects the fractional LP, otherwise weights in (1/scale)N.
SolveResult solve_min_size(const Network& net, const Clutter& k, Problem problem,
                           long long scale, bool simple_only,
                           const SolverLimits& limits = {});

}  // namespace pathpack
