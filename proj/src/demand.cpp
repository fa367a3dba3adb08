#include "pathpack/demand.hpp"

#include <algorithm>

namespace pathpack {

int Clutter::coverage(const NodeId& u, const NodeId& v) const {
  int n = 0;
  for (const auto& m : members)
    if (m.count(u) && m.count(v)) ++n;
  return n;
}

Clutter normalize_clutter(std::vector<std::set<NodeId>> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (const auto& m : members)
    if (m.empty()) throw Error(errc::invalid_argument, "empty clutter member");
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      if (std::includes(members[j].begin(), members[j].end(), members[i].begin(),
                        members[i].end()))
        throw Error(errc::invalid_argument,
                    "clutter member contained in another member");
    }
  Clutter k;
  k.members = std::move(members);
  return k;
}

const char* pair_class_name(PairClass c) {
  switch (c) {
    case PairClass::Strong: return "strong";
    case PairClass::Weak: return "weak";
    case PairClass::Zero: return "zero";
  }
  return "?";
}

Clutter anticliques(const std::set<NodeId>& terminals,
                    const std::set<NodePair>& demands, int terminal_limit) {
  int n = (int)terminals.size();
  if (n > terminal_limit)
    throw Error(errc::terminal_limit_exceeded,
                std::to_string(n) + " terminals exceeds enumeration limit " +
                    std::to_string(terminal_limit));
  std::vector<NodeId> ts(terminals.begin(), terminals.end());
  // adjacency bitmasks of the demand graph
  std::vector<unsigned> adj(n, 0);
  for (const auto& [a, b] : demands) {
    int i = (int)(std::lower_bound(ts.begin(), ts.end(), a) - ts.begin());
    int j = (int)(std::lower_bound(ts.begin(), ts.end(), b) - ts.begin());
    adj[i] |= 1u << j;
    adj[j] |= 1u << i;
  }
  std::vector<unsigned> stable_max;
  for (unsigned s = 1; s < (1u << n); ++s) {
    bool stable = true;
    for (int i = 0; i < n && stable; ++i)
      if ((s >> i & 1) && (adj[i] & s)) stable = false;
    if (!stable) continue;
    // maximal: no vertex outside s can be added
    bool maximal = true;
    for (int i = 0; i < n && maximal; ++i)
      if (!(s >> i & 1) && !(adj[i] & s)) maximal = false;
    if (maximal) stable_max.push_back(s);
  }
  std::vector<std::set<NodeId>> members;
  for (unsigned s : stable_max) {
    std::set<NodeId> m;
    for (int i = 0; i < n; ++i)
      if (s >> i & 1) m.insert(ts[i]);
    members.push_back(std::move(m));
  }
  return normalize_clutter(std::move(members));
}

bool is_k_clutter(const Clutter& k, KClutterWitness* witness) {
  size_t n = k.members.size();
  auto inter = [](const std::set<NodeId>& a, const std::set<NodeId>& b) {
    std::set<NodeId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.begin()));
    return out;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      auto ij = inter(k.members[i], k.members[j]);
      if (ij.empty()) continue;
      for (size_t l = j + 1; l < n; ++l) {
        auto il = inter(k.members[i], k.members[l]);
        if (il.empty()) continue;
        auto jl = inter(k.members[j], k.members[l]);
        if (jl.empty()) continue;
        if (ij != il || ij != jl) {
          if (witness) *witness = {k.members[i], k.members[j], k.members[l]};
          return false;
        }
      }
    }
  return true;
}

PairClass classify_pair(const Clutter& k, const std::set<NodeId>& terminals,
                        const NodeId& u, const NodeId& v) {
  if (u == v) throw Error(errc::same_terminal, "pair (" + u + "," + v + ")");
  if (!terminals.count(u)) throw Error(errc::unknown_terminal, "'" + u + "'");
  if (!terminals.count(v)) throw Error(errc::unknown_terminal, "'" + v + "'");
  int c = k.coverage(u, v);
  if (c == 0) return PairClass::Strong;
  if (c == 1) return PairClass::Weak;
  return PairClass::Zero;
}

Rat pair_weight_w(const Clutter& k, const std::set<NodeId>& terminals,
                  const NodeId& u, const NodeId& v) {
  switch (classify_pair(k, terminals, u, v)) {
    case PairClass::Strong: return Rat(1);
    case PairClass::Weak: return Rat(1, 2);
    case PairClass::Zero: return Rat(0);
  }
  return Rat(0);
}

AtomPartition atoms(const Clutter& k, const std::set<NodeId>& terminals) {
  // u,v share an atom iff no member contains exactly one of them.
  auto separated = [&](const NodeId& u, const NodeId& v) {
    for (const auto& m : k.members)
      if (m.count(u) != m.count(v)) return true;
    return false;
  };
  AtomPartition part;
  std::set<NodeId> seen;
  for (const auto& t : terminals) {
    if (seen.count(t)) continue;
    std::set<NodeId> block{t};
    for (const auto& s : terminals) {
      if (s == t || seen.count(s)) continue;
      if (!separated(t, s)) block.insert(s);
    }
    for (const auto& s : block) seen.insert(s);
    part.blocks.push_back(std::move(block));
  }
  part.simple = true;
  for (const auto& b : part.blocks)
    if (b.size() > 1) part.simple = false;
  return part;
}

CompressedInstance compress_atoms(const Network& net, const Clutter& k) {
  AtomPartition part = atoms(k, net.terminals());
  std::map<NodeId, NodeId> rep;
  for (const auto& b : part.blocks) {
    const NodeId& name = *b.begin();
    for (const auto& t : b) rep[t] = name;
  }
  auto map_node = [&](const NodeId& x) {
    auto it = rep.find(x);
    return it == rep.end() ? x : it->second;
  };

  Multigraph g;
  for (const auto& x : net.graph().nodes()) g.add_node(map_node(x));
  for (const auto& [pr, c] : net.graph().edges()) {
    NodeId a = map_node(pr.first), b = map_node(pr.second);
    if (a == b) continue;  // merged away
    g.add_edge(a, b, c);
  }

  std::set<NodeId> terminals;
  for (const auto& t : net.terminals()) terminals.insert(map_node(t));

  std::set<NodePair> demands;
  for (const auto& [a, b] : net.demands()) {
    NodeId ma = map_node(a), mb = map_node(b);
    if (ma != mb) demands.insert(make_pair_norm(ma, mb));
  }

  std::vector<std::set<NodeId>> members;
  for (const auto& m : k.members) {
    std::set<NodeId> mm;
    for (const auto& t : m) mm.insert(map_node(t));
    members.push_back(std::move(mm));
  }

  CompressedInstance out{Network(std::move(g), std::move(terminals), std::move(demands)),
                         normalize_clutter(std::move(members)), std::move(rep)};
  return out;
}

KNetworkReport validate_k_network(const Network& net, const Clutter& k,
                                  int terminal_limit) {
  KNetworkReport rep;
  Clutter derived = anticliques(net.terminals(), net.demands(), terminal_limit);
  rep.anticliques_match = (derived == k);
  if (!rep.anticliques_match)
    rep.notes.push_back("clutter differs from the anticliques of (T,S)");
  KClutterWitness w;
  rep.clutter_ok = is_k_clutter(k, &w);
  if (!rep.clutter_ok) {
    rep.witness = w;
    rep.notes.push_back("triple condition fails");
  }
  rep.eulerian = net.is_eulerian();
  if (!rep.eulerian) {
    for (const auto& x : net.inner_nodes())
      if (net.degree(x) % 2 != 0) {
        rep.notes.push_back("inner node " + x + " has odd degree " +
                            std::to_string(net.degree(x)));
        break;
      }
  }
  return rep;
}

std::set<NodePair> strong_pairs(const Clutter& k, const std::set<NodeId>& terminals) {
  std::set<NodePair> out;
  for (auto i = terminals.begin(); i != terminals.end(); ++i)
    for (auto j = std::next(i); j != terminals.end(); ++j)
      if (k.coverage(*i, *j) == 0) out.insert(make_pair_norm(*i, *j));
  return out;
}

}  // namespace pathpack
