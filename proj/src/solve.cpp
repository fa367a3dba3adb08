#include "pathpack/solve.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace pathpack {

std::vector<TPath> enumerate_t_paths(const Network& net, bool simple_only,
                                     size_t max_paths) {
  std::map<NodeId, std::vector<NodeId>> adj;
  for (const auto& [pr, c] : net.graph().edges()) {
    if (c <= 0) continue;
    adj[pr.first].push_back(pr.second);
    adj[pr.second].push_back(pr.first);
  }
  for (auto& [n, list] : adj) std::sort(list.begin(), list.end());

  std::vector<TPath> out;
  std::vector<NodeId> stack;
  std::set<NodeId> visited;

  std::function<void(const NodeId&)> extend = [&](const NodeId& u) {
    auto it = adj.find(u);
    if (it == adj.end()) return;
    for (const NodeId& v : it->second) {
      if (visited.count(v)) continue;
      stack.push_back(v);
      visited.insert(v);
      if (net.is_terminal(v)) {
        if (stack.front() < v) {
          if (out.size() >= max_paths)
            throw Error(errc::too_many_paths,
                        "more than " + std::to_string(max_paths) + " T-paths");
          out.push_back(TPath::unchecked(stack));
        }
        if (!simple_only) extend(v);
      } else {
        extend(v);
      }
      visited.erase(v);
      stack.pop_back();
    }
  };

  for (const auto& t : net.terminals()) {
    stack = {t};
    visited = {t};
    extend(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rat path_reward(const Network& net, const Clutter& k, Problem problem, const TPath& p) {
  auto [u, v] = p.ends();
  PairClass c = classify_pair(k, net.terminals(), u, v);
  if (problem == Problem::S) return c == PairClass::Strong ? Rat(1) : Rat(0);
  switch (c) {
    case PairClass::Strong: return Rat(1);
    case PairClass::Weak: return Rat(1, 2);
    case PairClass::Zero: return Rat(0);
  }
  return Rat(0);
}

namespace {

struct ColumnSystem {
  std::vector<TPath> paths;
  std::vector<NodePair> pairs;
  std::vector<long long> caps;
  std::vector<std::vector<int>> path_pairs;      // pair indices along each path
  std::vector<NodeId> terminals;
  std::vector<std::vector<int>> terminal_pairs;  // incident pair indices
};

ColumnSystem build_system(const Network& net, bool simple_only,
                          const SolverLimits& limits) {
  ColumnSystem sys;
  sys.paths = enumerate_t_paths(net, simple_only, limits.max_paths);
  for (const auto& [pr, c] : net.graph().edges()) {
    sys.pairs.push_back(pr);
    sys.caps.push_back(c);
  }
  auto pair_index = [&](const NodePair& pr) {
    return (int)(std::lower_bound(sys.pairs.begin(), sys.pairs.end(), pr) -
                 sys.pairs.begin());
  };
  for (const auto& p : sys.paths) {
    std::vector<int> idx;
    const auto& nodes = p.nodes();
    for (size_t i = 0; i + 1 < nodes.size(); ++i)
      idx.push_back(pair_index(make_pair_norm(nodes[i], nodes[i + 1])));
    sys.path_pairs.push_back(std::move(idx));
  }
  sys.terminals.assign(net.terminals().begin(), net.terminals().end());
  sys.terminal_pairs.resize(sys.terminals.size());
  for (size_t ti = 0; ti < sys.terminals.size(); ++ti)
    for (size_t e = 0; e < sys.pairs.size(); ++e)
      if (sys.pairs[e].first == sys.terminals[ti] ||
          sys.pairs[e].second == sys.terminals[ti])
        sys.terminal_pairs[ti].push_back((int)e);
  return sys;
}

std::vector<Rat> rewards(const ColumnSystem& sys, const Network& net, const Clutter& k,
                         Problem problem) {
  std::vector<Rat> out;
  out.reserve(sys.paths.size());
  for (const auto& p : sys.paths) out.push_back(path_reward(net, k, problem, p));
  return out;
}

struct PinnedRow {
  std::vector<Rat> coeff;
  Rat target;
};

// LP over the path polytope with optional pinned equality rows.
LpSolution lp_solve(const ColumnSystem& sys, const std::vector<Rat>& coeff,
                    bool minimize, const std::vector<PinnedRow>& pinned) {
  LpProblem lp;
  for (const auto& c : coeff) lp.add_var(minimize ? -c : c);
  for (size_t e = 0; e < sys.pairs.size(); ++e) {
    LpRow row;
    row.rel = Rel::le;
    row.rhs = Rat(sys.caps[e]);
    lp.add_row(std::move(row));
  }
  for (size_t p = 0; p < sys.paths.size(); ++p)
    for (int e : sys.path_pairs[p]) lp.rows[(size_t)e].coeff[(int)p] = Rat(1);
  for (const auto& pr : pinned) {
    LpRow row;
    row.rel = Rel::eq;
    row.rhs = pr.target;
    for (size_t p = 0; p < sys.paths.size(); ++p)
      if (!pr.coeff[p].is_zero()) row.coeff[(int)p] = pr.coeff[p];
    lp.add_row(std::move(row));
  }
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::optimal)
    throw Error(errc::invalid_argument, "path LP unexpectedly not optimal");
  if (minimize) sol.value = -sol.value;
  return sol;
}

long long grid_denominator(const std::vector<Rat>& coeff) {
  long long g = 1;
  for (const auto& c : coeff) g = checked_lcm(g, c.den());
  return g;
}

struct PhaseSpec {
  std::vector<Rat> coeff;  // scaled objective coeff·y
  bool minimize = false;
  std::vector<PinnedRow> pinned;
  std::optional<Rat> known_opt;  // scaled early-exit target
};

struct PhaseResult {
  Rat value;
  std::vector<long long> y;
};

// Depth-first branch and bound over path multiplicities y with capacities
// D·c(e). Bounds: per-path residual bottlenecks plus the terminal-degree
// bound (every unit of weight consumes one residual unit at each of its two
// terminal ends).
PhaseResult run_phase(const ColumnSystem& sys, long long D, const PhaseSpec& spec,
                      const std::vector<long long>* seed_y, long long& budget) {
  size_t n = sys.paths.size();
  size_t m = sys.pairs.size();

  // pinned rows must have coefficients in [0,1]: the minimization lower bound
  // counts each unit of deficit as at least one unit of size
  for (const auto& r : spec.pinned)
    for (const auto& c : r.coeff)
      if (c.is_negative() || c > Rat(1))
        throw std::logic_error("pinned coefficient outside [0,1]");

  std::vector<int> order;
  for (size_t p = 0; p < n; ++p) {
    bool involved = !spec.coeff[p].is_zero();
    for (const auto& r : spec.pinned) involved |= !r.coeff[p].is_zero();
    if (involved) order.push_back((int)p);
  }
  const std::vector<Rat>& primary =
      spec.minimize && !spec.pinned.empty() ? spec.pinned[0].coeff : spec.coeff;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (primary[(size_t)a] != primary[(size_t)b])
      return primary[(size_t)b] < primary[(size_t)a];
    return sys.paths[(size_t)a].length() < sys.paths[(size_t)b].length();
  });

  std::vector<long long> residual(m);
  for (size_t e = 0; e < m; ++e) residual[e] = D * sys.caps[e];

  // suffix maxima of coefficient vectors over the branch order
  auto suffix_max = [&](const std::vector<Rat>& c) {
    std::vector<Rat> sm(order.size() + 1, Rat(0));
    for (size_t i = order.size(); i-- > 0;)
      sm[i] = std::max(sm[i + 1], c[(size_t)order[i]]);
    return sm;
  };
  std::vector<Rat> obj_sm = suffix_max(spec.coeff);
  std::vector<std::vector<Rat>> pin_sm;
  for (const auto& r : spec.pinned) pin_sm.push_back(suffix_max(r.coeff));

  auto min_residual = [&](int p) {
    long long mr = residual[(size_t)sys.path_pairs[(size_t)p][0]];
    for (int e : sys.path_pairs[(size_t)p])
      mr = std::min(mr, residual[(size_t)e]);
    return mr;
  };

  // half the total residual capacity at terminals
  auto terminal_budget = [&]() {
    long long s = 0;
    for (const auto& tp : sys.terminal_pairs)
      for (int e : tp) s += residual[(size_t)e];
    return Rat(s, 2);
  };

  // True when a valid upper bound on the suffix contribution of c lies
  // strictly below `need`. Accumulation stops as soon as pruning is ruled out.
  auto suffix_cannot_reach = [&](const std::vector<Rat>& c, const std::vector<Rat>& sm,
                                 size_t depth, const Rat& need) {
    if (need <= Rat(0)) return false;
    if (sm[depth] * terminal_budget() < need) return true;
    Rat sum;
    for (size_t i = depth; i < order.size(); ++i) {
      const Rat& cp = c[(size_t)order[i]];
      if (cp.is_zero()) continue;
      sum += cp * Rat(min_residual(order[i]));
      if (sum >= need) return false;
    }
    return true;
  };

  // True when a valid upper bound on the suffix contribution of c is <= cap.
  auto suffix_cannot_exceed = [&](const std::vector<Rat>& c, const std::vector<Rat>& sm,
                                  size_t depth, const Rat& cap) {
    if (cap.is_negative()) return false;
    if (sm[depth] * terminal_budget() <= cap) return true;
    Rat sum;
    for (size_t i = depth; i < order.size(); ++i) {
      const Rat& cp = c[(size_t)order[i]];
      if (cp.is_zero()) continue;
      sum += cp * Rat(min_residual(order[i]));
      if (sum > cap) return false;
    }
    return true;
  };

  std::vector<long long> y(n, 0);
  std::optional<std::vector<long long>> best;
  Rat best_val;
  auto value_of = [&](const std::vector<long long>& yy) {
    Rat v;
    for (size_t p = 0; p < n; ++p)
      if (yy[p] > 0) v += spec.coeff[p] * Rat(yy[p]);
    return v;
  };
  if (seed_y) {
    best = *seed_y;
    best_val = value_of(*seed_y);
  } else if (spec.pinned.empty()) {
    best = y;
    best_val = Rat(0);
  }

  bool done = false;
  if (spec.known_opt && best && best_val == *spec.known_opt) done = true;

  std::vector<Rat> cur_pin(spec.pinned.size());
  Rat cur_obj;

  std::function<void(size_t)> dfs = [&](size_t depth) {
    if (done) return;
    if (--budget < 0)
      throw Error(errc::search_budget_exceeded, "branch-and-bound budget exhausted");

    for (size_t r = 0; r < spec.pinned.size(); ++r) {
      Rat deficit = spec.pinned[r].target - cur_pin[r];
      if (deficit.is_negative()) return;
      if (suffix_cannot_reach(spec.pinned[r].coeff, pin_sm[r], depth, deficit)) return;
    }
    if (best) {
      if (!spec.minimize) {
        if (suffix_cannot_exceed(spec.coeff, obj_sm, depth, best_val - cur_obj)) return;
      } else {
        // pinned coefficients are at most 1, so any remaining deficit costs
        // at least that much additional size
        Rat lb = cur_obj;
        for (size_t r = 0; r < spec.pinned.size(); ++r) {
          Rat deficit = spec.pinned[r].target - cur_pin[r];
          if (deficit > Rat(0)) lb = std::max(lb, cur_obj + deficit);
        }
        if (lb >= best_val) return;
      }
    }
    if (depth == order.size()) {
      for (size_t r = 0; r < spec.pinned.size(); ++r)
        if (cur_pin[r] != spec.pinned[r].target) return;
      bool better = !best || (spec.minimize ? cur_obj < best_val : cur_obj > best_val);
      if (better) {
        best = y;
        best_val = cur_obj;
        if (spec.known_opt && best_val == *spec.known_opt) done = true;
      }
      return;
    }

    int p = order[depth];
    long long ymax = min_residual(p);
    for (size_t r = 0; r < spec.pinned.size(); ++r) {
      const Rat& c = spec.pinned[r].coeff[(size_t)p];
      if (c.is_zero()) continue;
      Rat deficit = spec.pinned[r].target - cur_pin[r];
      ymax = std::min(ymax, (deficit / c).floor());
    }
    if (ymax < 0) return;

    auto try_value = [&](long long v) {
      y[(size_t)p] = v;
      for (int e : sys.path_pairs[(size_t)p]) residual[(size_t)e] -= v;
      cur_obj += spec.coeff[(size_t)p] * Rat(v);
      for (size_t r = 0; r < spec.pinned.size(); ++r)
        cur_pin[r] += spec.pinned[r].coeff[(size_t)p] * Rat(v);
      dfs(depth + 1);
      for (size_t r = 0; r < spec.pinned.size(); ++r)
        cur_pin[r] -= spec.pinned[r].coeff[(size_t)p] * Rat(v);
      cur_obj -= spec.coeff[(size_t)p] * Rat(v);
      for (int e : sys.path_pairs[(size_t)p]) residual[(size_t)e] += v;
      y[(size_t)p] = 0;
    };
    // Descending order reaches pinned targets greedily (few heavy paths);
    // for pure maximization it also produces strong incumbents early.
    for (long long v = ymax; v >= 0 && !done; --v) try_value(v);
  };
  dfs(0);

  if (!best)
    throw Error(errc::search_budget_exceeded,
                "no feasible point found for pinned targets");
  PhaseResult res;
  res.y = *best;
  res.value = best_val;
  return res;
}

Multiflow flow_from_scaled(const ColumnSystem& sys, const std::vector<long long>& y,
                           long long D) {
  Multiflow f;
  for (size_t p = 0; p < sys.paths.size(); ++p)
    if (y[p] > 0) f.add(sys.paths[p], Rat(y[p], D));
  return f;
}

Multiflow flow_from_lp(const ColumnSystem& sys, const std::vector<Rat>& x) {
  Multiflow f;
  for (size_t p = 0; p < sys.paths.size(); ++p)
    if (!x[p].is_zero()) f.add(sys.paths[p], x[p]);
  return f;
}

}  // namespace

SolveResult solve_fractional(const Network& net, const Clutter& k, Problem problem,
                             bool simple_only, const SolverLimits& limits) {
  ColumnSystem sys = build_system(net, simple_only, limits);
  std::vector<Rat> coeff = rewards(sys, net, k, problem);
  LpSolution sol = lp_solve(sys, coeff, false, {});
  SolveResult res;
  res.flow = flow_from_lp(sys, sol.x);
  res.value = sol.value;
  res.size = res.flow.size();
  res.mode = "lp";
  res.simple_only = simple_only;
  return res;
}

SolveResult solve_scaled_integer(const Network& net, const Clutter& k, Problem problem,
                                 long long D, bool simple_only,
                                 const SolverLimits& limits) {
  if (D <= 0) throw Error(errc::invalid_argument, "scale must be positive");
  ColumnSystem sys = build_system(net, simple_only, limits);
  std::vector<Rat> coeff = rewards(sys, net, k, problem);
  Rat lp_bound = lp_solve(sys, coeff, false, {}).value;

  PhaseSpec spec;
  spec.coeff = coeff;
  long long grid = grid_denominator(coeff);
  spec.known_opt = (Rat(D) * lp_bound).floor_to_grid(grid);
  long long budget = limits.search_budget;
  PhaseResult best = run_phase(sys, D, spec, nullptr, budget);

  SolveResult res;
  res.flow = flow_from_scaled(sys, best.y, D);
  res.value = best.value / Rat(D);
  res.size = res.flow.size();
  res.mode = "scaled:" + std::to_string(D);
  res.simple_only = simple_only;
  return res;
}

SolveResult min_size_w_solution(const Network& net, const Clutter& k,
                                const SolverLimits& limits) {
  const long long D = 2;
  ColumnSystem sys = build_system(net, true, limits);
  std::vector<Rat> w = rewards(sys, net, k, Problem::W);
  std::vector<Rat> ones(sys.paths.size(), Rat(1));

  // Unrestricted fractional optimum; the theorem says the simple
  // half-integer search must reach exactly this value.
  Rat theta = solve_fractional(net, k, Problem::W, false, limits).value;

  LpSolution lp1 = lp_solve(sys, w, false, {});
  if (lp1.value != theta)
    throw Error(errc::half_integer_gap_detected,
                "simple-path LP theta " + lp1.value.str() +
                    " differs from unrestricted theta " + theta.str());
  Rat lp_min_size = lp_solve(sys, ones, true, {{w, theta}}).value;

  long long budget = limits.search_budget;
  PhaseSpec phase1;
  phase1.coeff = w;
  phase1.known_opt = (Rat(D) * theta).floor_to_grid(grid_denominator(w));
  PhaseResult r1 = run_phase(sys, D, phase1, nullptr, budget);
  if (r1.value != Rat(D) * theta)
    throw Error(errc::half_integer_gap_detected,
                "half-integer simple theta " + (r1.value / Rat(D)).str() +
                    " differs from fractional theta " + theta.str());

  PhaseSpec phase2;
  phase2.coeff = ones;
  phase2.minimize = true;
  phase2.pinned.push_back({w, r1.value});
  phase2.known_opt = (Rat(D) * lp_min_size).ceil_to_grid(1);
  PhaseResult r2 = run_phase(sys, D, phase2, &r1.y, budget);
  if (r2.value != Rat(D) * lp_min_size)
    throw Error(errc::half_integer_gap_detected,
                "half-integer least size " + (r2.value / Rat(D)).str() +
                    " differs from fractional least size " + lp_min_size.str());

  SolveResult res;
  res.flow = flow_from_scaled(sys, r2.y, D);
  res.value = theta;
  res.size = res.flow.size();
  res.mode = "scaled:2";
  res.simple_only = true;
  return res;
}

LovaszCherkasskyReport lovasz_cherkassky_value(const Network& net,
                                               const SolverLimits& limits) {
  LovaszCherkasskyReport rep;
  for (const auto& t : net.terminals()) rep.bound += Rat(lambda(net, {t}).value, 2);
  rep.eulerian = net.is_eulerian();

  ColumnSystem sys = build_system(net, false, limits);
  std::vector<Rat> ones(sys.paths.size(), Rat(1));
  LpSolution sol = lp_solve(sys, ones, false, {});
  rep.lp_max = sol.value;
  rep.flow = flow_from_lp(sys, sol.x);
  rep.equal = (rep.lp_max == rep.bound);
  if (rep.eulerian && !rep.equal)
    throw std::logic_error("Lovasz-Cherkassky equality failed on an Eulerian network");
  return rep;
}

SolveResult solve_min_size(const Network& net, const Clutter& k, Problem problem,
                           long long scale, bool simple_only,
                           const SolverLimits& limits) {
  ColumnSystem sys = build_system(net, simple_only, limits);
  std::vector<Rat> coeff = rewards(sys, net, k, problem);
  std::vector<Rat> ones(sys.paths.size(), Rat(1));
  SolveResult res;
  res.simple_only = simple_only;
  if (scale == 0) {
    Rat best = lp_solve(sys, coeff, false, {}).value;
    LpSolution sol = lp_solve(sys, ones, true, {{coeff, best}});
    res.flow = flow_from_lp(sys, sol.x);
    res.value = best;
    res.size = res.flow.size();
    res.mode = "lp";
    return res;
  }
  long long budget = limits.search_budget;
  Rat lp_bound = lp_solve(sys, coeff, false, {}).value;
  PhaseSpec phase1;
  phase1.coeff = coeff;
  phase1.known_opt = (Rat(scale) * lp_bound).floor_to_grid(grid_denominator(coeff));
  PhaseResult r1 = run_phase(sys, scale, phase1, nullptr, budget);
  PhaseSpec phase2;
  phase2.coeff = ones;
  phase2.minimize = true;
  phase2.pinned.push_back({coeff, r1.value});
  PhaseResult r2 = run_phase(sys, scale, phase2, &r1.y, budget);
  res.flow = flow_from_scaled(sys, r2.y, scale);
  res.value = r1.value / Rat(scale);
  res.size = res.flow.size();
  res.mode = "scaled:" + std::to_string(scale);
  return res;
}

SolveResult max_size_flow(const Network& net, const SolverLimits& limits) {
  ColumnSystem sys = build_system(net, false, limits);
  std::vector<Rat> ones(sys.paths.size(), Rat(1));
  std::vector<Rat> usage;
  for (const auto& p : sys.paths) usage.push_back(Rat((long long)p.length()));
  Rat best_size = lp_solve(sys, ones, false, {}).value;
  LpSolution sol = lp_solve(sys, usage, false, {{ones, best_size}});
  SolveResult res;
  res.flow = flow_from_lp(sys, sol.x);
  res.value = best_size;
  res.size = res.flow.size();
  res.mode = "lp";
  return res;
}

SolveResult max_theta_max_size_flow(const Network& net, const Clutter& k,
                                    const SolverLimits& limits) {
  ColumnSystem sys = build_system(net, false, limits);
  std::vector<Rat> w = rewards(sys, net, k, Problem::W);
  std::vector<Rat> ones(sys.paths.size(), Rat(1));
  Rat theta = lp_solve(sys, w, false, {}).value;
  LpSolution sol = lp_solve(sys, ones, false, {{w, theta}});
  SolveResult res;
  res.flow = flow_from_lp(sys, sol.x);
  res.value = theta;
  res.size = res.flow.size();
  res.mode = "lp";
  return res;
}

SolveResult common_solution_search(const Network& net, const Clutter& k,
                                   const SolverLimits& limits) {
  const long long D = 2;
  ColumnSystem sys = build_system(net, false, limits);
  std::vector<Rat> w = rewards(sys, net, k, Problem::W);
  std::vector<Rat> s = rewards(sys, net, k, Problem::S);
  std::vector<Rat> ones(sys.paths.size(), Rat(1));

  Rat theta = lp_solve(sys, w, false, {}).value;
  Rat eta = lp_solve(sys, s, false, {}).value;
  Rat min_size = lp_solve(sys, ones, true, {{w, theta}}).value;

  long long budget = limits.search_budget;
  PhaseSpec phase1;
  phase1.coeff = w;
  phase1.known_opt = (Rat(D) * theta).floor_to_grid(grid_denominator(w));
  PhaseResult r1 = run_phase(sys, D, phase1, nullptr, budget);
  if (r1.value != Rat(D) * theta)
    throw Error(errc::common_solution_gap_detected,
                "half-integer theta " + (r1.value / Rat(D)).str() +
                    " differs from fractional theta " + theta.str());

  PhaseSpec phase2;
  phase2.coeff = ones;
  phase2.minimize = true;
  phase2.pinned.push_back({w, r1.value});
  phase2.known_opt = (Rat(D) * min_size).ceil_to_grid(1);
  PhaseResult r2 = run_phase(sys, D, phase2, &r1.y, budget);
  if (r2.value != Rat(D) * min_size)
    throw Error(errc::common_solution_gap_detected,
                "half-integer least size " + (r2.value / Rat(D)).str() +
                    " differs from fractional least size " + min_size.str());

  PhaseSpec phase3;
  phase3.coeff = s;
  phase3.pinned.push_back({w, r1.value});
  phase3.pinned.push_back({ones, r2.value});
  phase3.known_opt = (Rat(D) * eta).floor_to_grid(grid_denominator(s));
  PhaseResult r3 = run_phase(sys, D, phase3, &r2.y, budget);
  if (r3.value != Rat(D) * eta)
    throw Error(errc::common_solution_gap_detected,
                "least-size W-solution reaches f[S] = " + (r3.value / Rat(D)).str() +
                    " but eta = " + eta.str());

  SolveResult res;
  res.flow = flow_from_scaled(sys, r3.y, D);
  res.value = theta;
  res.size = res.flow.size();
  res.mode = "scaled:2";
  res.simple_only = false;
  return res;
}

}  // namespace pathpack
