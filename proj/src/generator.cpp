#include "pathpack/generator.hpp"

#include <algorithm>

#include "pathpack/solve.hpp"

namespace pathpack {

namespace {

std::set<NodePair> random_k_demands(Rng& rng, const std::vector<NodeId>& terms) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::set<NodePair> demands;
    for (size_t i = 0; i < terms.size(); ++i)
      for (size_t j = i + 1; j < terms.size(); ++j)
        if (rng.below(3) == 0) demands.insert(make_pair_norm(terms[i], terms[j]));
    std::set<NodeId> tset(terms.begin(), terms.end());
    Clutter k = anticliques(tset, demands);
    if (is_k_clutter(k)) return demands;
  }
  throw Error(errc::invalid_argument, "could not sample a K-clutter demand graph");
}

Multigraph random_multigraph(Rng& rng, const std::vector<NodeId>& names,
                             int max_multiplicity) {
  Multigraph g;
  for (const auto& n : names) g.add_node(n);
  // random spanning tree keeps every terminal reachable
  std::vector<NodeId> shuffled = names;
  for (size_t i = shuffled.size(); i > 1; --i)
    std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
  for (size_t i = 1; i < shuffled.size(); ++i)
    g.add_edge(shuffled[i], shuffled[rng.below(i)], 1 + (long long)rng.below(2));
  size_t extra = rng.below(names.size()) + 1;
  for (size_t e = 0; e < extra; ++e) {
    const NodeId& u = names[rng.below(names.size())];
    const NodeId& v = names[rng.below(names.size())];
    if (u == v) continue;
    long long cur = g.multiplicity(u, v);
    if (cur >= max_multiplicity) continue;
    g.add_edge(u, v, 1);
  }
  return g;
}

// Pair up odd inner nodes; a leftover odd inner node is matched with a
// terminal (whose parity is unconstrained).
bool repair_parity(Rng& rng, Multigraph& g, const std::set<NodeId>& terminals,
                   int max_multiplicity) {
  std::vector<NodeId> odd;
  for (const auto& n : g.nodes())
    if (!terminals.count(n) && g.degree(n) % 2 != 0) odd.push_back(n);
  while (odd.size() >= 2) {
    NodeId a = odd.back();
    odd.pop_back();
    NodeId b = odd.back();
    odd.pop_back();
    if (g.multiplicity(a, b) >= max_multiplicity) return false;
    g.add_edge(a, b, 1);
  }
  if (!odd.empty()) {
    std::vector<NodeId> terms(terminals.begin(), terminals.end());
    const NodeId& t = terms[rng.below(terms.size())];
    if (g.multiplicity(odd[0], t) >= max_multiplicity) return false;
    g.add_edge(odd[0], t, 1);
  }
  return true;
}

}  // namespace

Instance random_k_network(std::uint64_t seed, const GenParams& params) {
  if (params.terminals < 2 || params.terminals > params.nodes)
    throw Error(errc::invalid_argument, "need 2 <= terminals <= nodes");
  if (!params.eulerian && params.terminals == params.nodes)
    throw Error(errc::invalid_argument,
                "a network without inner nodes cannot be non-Eulerian");
  std::vector<NodeId> names;
  for (int i = 1; i <= params.terminals; ++i) names.push_back("t" + std::to_string(i));
  for (int i = 1; i <= params.nodes - params.terminals; ++i)
    names.push_back("x" + std::to_string(i));
  std::set<NodeId> terminals(names.begin(), names.begin() + params.terminals);
  std::vector<NodeId> terms(terminals.begin(), terminals.end());

  for (std::uint64_t attempt = 0; attempt < 200000; ++attempt) {
    Rng rng(seed * 0x100000001b3ULL + attempt);
    std::set<NodePair> demands = random_k_demands(rng, terms);
    Multigraph g = random_multigraph(rng, names, params.max_multiplicity);
    if (params.eulerian) {
      if (!repair_parity(rng, g, terminals, params.max_multiplicity)) continue;
    } else {
      bool has_odd_inner = false;
      for (const auto& n : g.nodes())
        if (!terminals.count(n) && g.degree(n) % 2 != 0) has_odd_inner = true;
      if (!has_odd_inner) continue;
    }
    Instance inst;
    inst.net = Network(std::move(g), terminals, demands);
    inst.clutter = anticliques(terminals, demands);
    if (params.eulerian && !inst.net.is_eulerian()) continue;
    try {
      enumerate_t_paths(inst.net, false, params.max_paths);
    } catch (const Error&) {
      continue;  // too dense; resample
    }
    return inst;
  }
  throw Error(errc::invalid_argument, "instance sampling did not converge");
}

Instance random_two_triangle_instance(std::uint64_t seed) {
  std::vector<NodeId> terms = {"s1", "s2", "s3", "t1", "t2", "t3"};
  std::set<NodeId> terminals(terms.begin(), terms.end());
  std::set<NodePair> demands;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      demands.insert(make_pair_norm(terms[(size_t)i], terms[(size_t)j]));
      demands.insert(make_pair_norm(terms[(size_t)(3 + i)], terms[(size_t)(3 + j)]));
    }

  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + attempt + 1);
    int inner_count = 1 + (int)rng.below(3);
    Multigraph g;
    std::vector<NodeId> inner;
    for (int i = 1; i <= inner_count; ++i) {
      inner.push_back("x" + std::to_string(i));
      g.add_node(inner.back());
    }
    for (const auto& t : terms) {
      g.add_node(t);
      g.add_edge(t, inner[rng.below(inner.size())], 1 + rng.below(2));
    }
    for (size_t i = 0; i + 1 < inner.size(); ++i)
      if (rng.below(2) == 0) g.add_edge(inner[i], inner[i + 1], 1 + rng.below(2));
    if (!repair_parity(rng, g, terminals, 4)) continue;

    Instance inst;
    inst.net = Network(std::move(g), terminals, demands);
    inst.clutter = anticliques(terminals, demands);
    if (!inst.net.is_eulerian()) continue;
    return inst;
  }
}

}  // namespace pathpack
