#include "pathpack/duality.hpp"

#include <algorithm>

#include "pathpack/cuts.hpp"

namespace pathpack {

size_t expansion_count(const Network& net, size_t cap) {
  size_t base = net.terminals().size() + 1;
  size_t count = 1;
  for (size_t i = 0; i < net.inner_nodes().size(); ++i) {
    if (count > cap / base + 1)
      throw Error(errc::too_many_expansions,
                  "expansion count exceeds cap " + std::to_string(cap));
    count *= base;
  }
  if (count > cap)
    throw Error(errc::too_many_expansions,
                std::to_string(count) + " expansions exceed cap " + std::to_string(cap));
  return count;
}

void for_each_expansion(const Network& net, size_t cap,
                        const std::function<void(const Expansion&)>& fn) {
  expansion_count(net, cap);
  std::vector<NodeId> terms(net.terminals().begin(), net.terminals().end());
  std::vector<NodeId> inner = net.inner_nodes();
  std::vector<size_t> choice(inner.size(), 0);  // 0 = unassigned, i+1 = terms[i]

  for (;;) {
    Expansion x;
    for (const auto& t : terms) x.blocks[t] = {t};
    for (size_t i = 0; i < inner.size(); ++i)
      if (choice[i] > 0) x.blocks[terms[choice[i] - 1]].insert(inner[i]);
    fn(x);
    // odometer, last inner node fastest
    size_t i = inner.size();
    while (i > 0) {
      --i;
      if (++choice[i] <= terms.size()) break;
      choice[i] = 0;
      if (i == 0) return;
    }
    if (inner.empty()) return;
  }
}

std::vector<Expansion> enumerate_expansions(const Network& net, size_t cap) {
  std::vector<Expansion> out;
  for_each_expansion(net, cap, [&](const Expansion& x) { out.push_back(x); });
  return out;
}

Network compress_expansion(const Network& net, const Expansion& x) {
  std::map<NodeId, NodeId> rep;
  for (const auto& [t, block] : x.blocks) {
    if (!net.is_terminal(t))
      throw Error(errc::unknown_terminal, "block label '" + t + "'");
    if (!block.count(t))
      throw Error(errc::invalid_argument, "block of '" + t + "' does not contain it");
    for (const auto& n : block) {
      if (!net.graph().has_node(n)) throw Error(errc::unknown_node, "node '" + n + "'");
      if (net.is_terminal(n) && n != t)
        throw Error(errc::invalid_argument,
                    "block of '" + t + "' contains terminal '" + n + "'");
      if (rep.count(n))
        throw Error(errc::invalid_argument, "blocks overlap at '" + n + "'");
      rep[n] = t;
    }
  }
  for (const auto& t : net.terminals())
    if (!x.blocks.count(t))
      throw Error(errc::invalid_argument, "no block for terminal '" + t + "'");

  auto map_node = [&](const NodeId& n) {
    auto it = rep.find(n);
    return it == rep.end() ? n : it->second;
  };
  Multigraph g;
  for (const auto& n : net.graph().nodes()) g.add_node(map_node(n));
  for (const auto& [pr, c] : net.graph().edges()) {
    NodeId a = map_node(pr.first), b = map_node(pr.second);
    if (a == b) continue;
    g.add_edge(a, b, c);
  }
  return Network(std::move(g), net.terminals(), net.demands());
}

Rat dual_value(const Network& net, const Clutter& k, const Expansion& x) {
  Network gx = compress_expansion(net, x);
  long long degree_sum = 0;
  for (const auto& t : gx.terminals()) degree_sum += gx.degree(t);
  Rat beta_sum;
  for (const auto& m : k.members) beta_sum += beta(gx, m);
  return Rat(degree_sum, 2) - beta_sum / Rat(2);
}

DualReport verify_maxmin(const Network& net, const Clutter& k,
                         const SolverLimits& limits) {
  if (!atoms(k, net.terminals()).simple)
    throw Error(errc::invalid_argument,
                "expansions need a simple clutter; compress atoms first");
  DualReport rep;
  rep.primal_theta = solve_fractional(net, k, Problem::W, false, limits).value;

  bool first = true;
  for_each_expansion(net, limits.max_expansions, [&](const Expansion& x) {
    Rat dv = dual_value(net, k, x);
    if (dv < rep.primal_theta) rep.weak_duality_ok = false;
    rep.critical_flags.push_back(dv == rep.primal_theta);
    if (first || dv < rep.min_dual) {
      rep.min_dual = dv;
      rep.best = x;
      first = false;
    }
    ++rep.expansions_checked;
  });
  rep.equality = !first && rep.min_dual == rep.primal_theta;
  return rep;
}

DualPropertyReport dual_solution_properties(const Network& net, const Clutter& k,
                                            const Expansion& x, const Multiflow& h,
                                            const SolverLimits& limits) {
  Rat theta = solve_fractional(net, k, Problem::W, false, limits).value;
  Rat dv = dual_value(net, k, x);
  if (dv != theta)
    throw Error(errc::not_dual_solution,
                "dual value " + dv.str() + " differs from theta " + theta.str());

  Network gx = compress_expansion(net, x);
  DualPropertyReport rep;

  std::map<NodePair, Rat> load;
  for (const auto& [p, w] : h.entries()) {
    const auto& nodes = p.nodes();
    for (size_t i = 0; i + 1 < nodes.size(); ++i)
      load[make_pair_norm(nodes[i], nodes[i + 1])] += w;
  }
  for (const auto& [pr, c] : gx.graph().edges()) {
    if (!gx.is_terminal(pr.first) && !gx.is_terminal(pr.second)) continue;
    Rat l = load.count(pr) ? load[pr] : Rat(0);
    if (l != Rat(c)) {
      rep.saturated = false;
      rep.unsaturated_edges.push_back(pr);
    }
  }
  for (const auto& t : gx.terminals()) {
    if (!locks(gx, h, {t})) {
      rep.blocks_locked = false;
      rep.unlocked_blocks.push_back(t);
    }
  }
  for (const auto& m : k.members) {
    if (!locks(gx, h, m)) {
      rep.clutter_locked = false;
      rep.unlocked_members.push_back(m);
    }
  }
  return rep;
}

}  // namespace pathpack
