#pragma once

// Brute-force oracles for the test suite. These deliberately avoid the
// library's algorithms: cuts are minimized over explicit subsets, stable sets
// come from a power-set scan, and optima are found by exhaustive recursion.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "pathpack/demand.hpp"
#include "pathpack/flows.hpp"
#include "pathpack/netmodel.hpp"
#include "pathpack/rational.hpp"

namespace oracle {

using namespace pathpack;

inline long long cut_weight(const Network& net, const std::set<NodeId>& X) {
  long long d = 0;
  for (const auto& [pr, c] : net.graph().edges()) {
    bool a = X.count(pr.first) > 0, b = X.count(pr.second) > 0;
    if (a != b) d += c;
  }
  return d;
}

// min d(X) over all node subsets X accepted by the filter; -1 if none.
inline long long min_cut_over_subsets(
    const Network& net, const std::function<bool(const std::set<NodeId>&)>& accept) {
  std::vector<NodeId> nodes(net.graph().nodes().begin(), net.graph().nodes().end());
  long long best = -1;
  for (unsigned long long mask = 0; mask < (1ULL << nodes.size()); ++mask) {
    std::set<NodeId> X;
    for (size_t i = 0; i < nodes.size(); ++i)
      if (mask >> i & 1) X.insert(nodes[i]);
    if (!accept(X)) continue;
    long long d = cut_weight(net, X);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

inline long long lambda_brute(const Network& net, const std::set<NodeId>& A) {
  if (A == net.terminals()) {
    // min over X containing every terminal (X = N included)
    return min_cut_over_subsets(net, [&](const std::set<NodeId>& X) {
      for (const auto& t : A)
        if (!X.count(t)) return false;
      return true;
    });
  }
  return min_cut_over_subsets(net, [&](const std::set<NodeId>& X) {
    for (const auto& t : net.terminals())
      if ((X.count(t) > 0) != (A.count(t) > 0)) return false;
    return true;
  });
}

inline long long max_flow_brute(const Network& net, const std::set<NodeId>& sources,
                                const std::set<NodeId>& sinks) {
  return min_cut_over_subsets(net, [&](const std::set<NodeId>& X) {
    for (const auto& s : sources)
      if (!X.count(s)) return false;
    for (const auto& t : sinks)
      if (X.count(t)) return false;
    return true;
  });
}

inline std::vector<std::set<NodeId>> max_stable_sets(const std::set<NodeId>& terminals,
                                                     const std::set<NodePair>& demands) {
  std::vector<NodeId> ts(terminals.begin(), terminals.end());
  auto stable = [&](const std::set<NodeId>& s) {
    for (const auto& [a, b] : demands)
      if (s.count(a) && s.count(b)) return false;
    return true;
  };
  std::vector<std::set<NodeId>> out;
  for (unsigned long long mask = 1; mask < (1ULL << ts.size()); ++mask) {
    std::set<NodeId> s;
    for (size_t i = 0; i < ts.size(); ++i)
      if (mask >> i & 1) s.insert(ts[i]);
    if (!stable(s)) continue;
    bool maximal = true;
    for (const auto& t : ts) {
      if (s.count(t)) continue;
      std::set<NodeId> bigger = s;
      bigger.insert(t);
      if (stable(bigger)) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Independent recursive enumeration of node-simple T-paths, deduplicated by
// canonical orientation.
inline std::vector<std::vector<NodeId>> all_t_paths(const Network& net,
                                                    bool simple_only) {
  std::set<std::vector<NodeId>> found;
  std::vector<NodeId> nodes(net.graph().nodes().begin(), net.graph().nodes().end());
  std::vector<NodeId> walk;
  std::function<void()> grow = [&]() {
    const NodeId last = walk.back();  // copy: push_back below may reallocate
    if (walk.size() >= 2 && net.is_terminal(last)) {
      bool interior_terminal = false;
      for (size_t i = 1; i + 1 < walk.size(); ++i)
        if (net.is_terminal(walk[i])) interior_terminal = true;
      if (!simple_only || !interior_terminal) {
        std::vector<NodeId> canon = walk;
        std::vector<NodeId> rev(walk.rbegin(), walk.rend());
        if (rev < canon) canon = rev;
        found.insert(canon);
      }
      if (simple_only) return;  // cannot extend past a terminal and stay simple
    }
    for (const auto& next : nodes) {
      if (net.graph().multiplicity(last, next) == 0) continue;
      if (std::find(walk.begin(), walk.end(), next) != walk.end()) continue;
      walk.push_back(next);
      grow();
      walk.pop_back();
    }
  };
  for (const auto& t : net.terminals()) {
    walk = {t};
    grow();
  }
  return std::vector<std::vector<NodeId>>(found.begin(), found.end());
}

// Exhaustive optimum over weights in (1/D)N: plain recursion over path
// multiplicities with only the capacity check. Tiny instances only.
inline Rat scaled_optimum_brute(const Network& net, const Clutter& k,
                                bool s_problem, long long D, bool simple_only) {
  auto raw = all_t_paths(net, simple_only);
  std::vector<std::vector<NodeId>> paths(raw.begin(), raw.end());
  std::vector<Rat> reward;
  for (const auto& p : paths) {
    PairClass c = classify_pair(k, net.terminals(),
                                std::min(p.front(), p.back()),
                                std::max(p.front(), p.back()));
    if (s_problem)
      reward.push_back(c == PairClass::Strong ? Rat(1) : Rat(0));
    else
      reward.push_back(c == PairClass::Strong  ? Rat(1)
                       : c == PairClass::Weak ? Rat(1, 2)
                                              : Rat(0));
  }
  std::map<NodePair, long long> residual;
  for (const auto& [pr, c] : net.graph().edges()) residual[pr] = D * c;

  Rat best;
  std::function<void(size_t, Rat)> rec = [&](size_t i, Rat acc) {
    if (i == paths.size()) {
      best = std::max(best, acc);
      return;
    }
    long long ymax = -1;
    for (size_t j = 0; j + 1 < paths[i].size(); ++j) {
      long long r = residual[make_pair_norm(paths[i][j], paths[i][j + 1])];
      ymax = ymax < 0 ? r : std::min(ymax, r);
    }
    for (long long y = 0; y <= ymax; ++y) {
      for (size_t j = 0; j + 1 < paths[i].size(); ++j)
        residual[make_pair_norm(paths[i][j], paths[i][j + 1])] -= y;
      rec(i + 1, acc + reward[i] * Rat(y, D));
      for (size_t j = 0; j + 1 < paths[i].size(); ++j)
        residual[make_pair_norm(paths[i][j], paths[i][j + 1])] += y;
    }
  };
  rec(0, Rat(0));
  return best;
}

// Menger oracle: maximum number of pairwise edge-disjoint source-sink paths,
// by exhaustive packing of explicitly enumerated paths.
inline int max_edge_disjoint_paths(const Network& net, const std::set<NodeId>& sources,
                                   const std::set<NodeId>& sinks) {
  std::vector<NodeId> nodes(net.graph().nodes().begin(), net.graph().nodes().end());
  std::vector<std::vector<NodeId>> paths;
  std::vector<NodeId> walk;
  std::function<void()> grow = [&]() {
    if (sinks.count(walk.back())) {
      paths.push_back(walk);
      return;
    }
    for (const auto& next : nodes) {
      if (net.graph().multiplicity(walk.back(), next) == 0) continue;
      if (std::find(walk.begin(), walk.end(), next) != walk.end()) continue;
      if (sources.count(next)) continue;
      walk.push_back(next);
      grow();
      walk.pop_back();
    }
  };
  for (const auto& s : sources) {
    walk = {s};
    grow();
  }
  std::map<NodePair, long long> residual;
  long long total_cap = 0;
  for (const auto& [pr, c] : net.graph().edges()) {
    residual[pr] = c;
    total_cap += c;
  }
  int best = 0;
  std::function<void(size_t, int)> rec = [&](size_t i, int used) {
    best = std::max(best, used);
    if (i == paths.size()) return;
    long long left = 0;
    for (const auto& [pr, r] : residual) left += r;
    if (used + left <= best) return;  // every extra path needs an edge unit
    long long ymax = -1;
    for (size_t j = 0; j + 1 < paths[i].size(); ++j) {
      long long r = residual[make_pair_norm(paths[i][j], paths[i][j + 1])];
      ymax = ymax < 0 ? r : std::min(ymax, r);
    }
    for (long long y = ymax; y >= 0; --y) {
      for (size_t j = 0; j + 1 < paths[i].size(); ++j)
        residual[make_pair_norm(paths[i][j], paths[i][j + 1])] -= y;
      rec(i + 1, used + (int)y);
      for (size_t j = 0; j + 1 < paths[i].size(); ++j)
        residual[make_pair_norm(paths[i][j], paths[i][j + 1])] += y;
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace oracle
