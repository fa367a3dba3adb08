#include "pathpack/flows.hpp"

#include <algorithm>
#include <deque>

namespace pathpack {

namespace {

std::string join_nodes(const std::vector<NodeId>& nodes) {
  std::string s;
  for (const auto& n : nodes) {
    if (!s.empty()) s += '-';
    s += n;
  }
  return s;
}

bool node_simple(const std::vector<NodeId>& nodes) {
  std::set<NodeId> seen(nodes.begin(), nodes.end());
  return seen.size() == nodes.size();
}

}  // namespace

TPath::TPath(std::vector<NodeId> nodes, const Network& net) {
  if (nodes.size() < 2)
    throw Error(errc::invalid_argument, "path needs at least one edge");
  for (const auto& n : nodes)
    if (!net.graph().has_node(n)) throw Error(errc::unknown_node, "node '" + n + "'");
  if (!net.is_terminal(nodes.front()) || !net.is_terminal(nodes.back()))
    throw Error(errc::invalid_argument,
                "path ends must be terminals: " + join_nodes(nodes));
  if (nodes.front() == nodes.back())
    throw Error(errc::invalid_argument, "closed walk: " + join_nodes(nodes));
  if (!node_simple(nodes))
    throw Error(errc::invalid_argument, "path repeats a node: " + join_nodes(nodes));
  for (size_t i = 0; i + 1 < nodes.size(); ++i)
    if (net.graph().multiplicity(nodes[i], nodes[i + 1]) == 0)
      throw Error(errc::path_not_in_graph,
                  "no edge (" + nodes[i] + "," + nodes[i + 1] + ")");
  nodes_ = std::move(nodes);
  if (nodes_.back() < nodes_.front()) std::reverse(nodes_.begin(), nodes_.end());
}

TPath TPath::unchecked(std::vector<NodeId> nodes) {
  TPath p;
  p.nodes_ = std::move(nodes);
  if (p.nodes_.back() < p.nodes_.front())
    std::reverse(p.nodes_.begin(), p.nodes_.end());
  return p;
}

bool TPath::contains(const NodeId& x) const {
  return std::find(nodes_.begin(), nodes_.end(), x) != nodes_.end();
}

bool TPath::is_interior(const NodeId& x) const {
  for (size_t i = 1; i + 1 < nodes_.size(); ++i)
    if (nodes_[i] == x) return true;
  return false;
}

bool TPath::is_simple(const Network& net) const {
  for (size_t i = 1; i + 1 < nodes_.size(); ++i)
    if (net.is_terminal(nodes_[i])) return false;
  return true;
}

int TPath::traversals(const NodePair& pr) const {
  for (size_t i = 0; i + 1 < nodes_.size(); ++i)
    if (make_pair_norm(nodes_[i], nodes_[i + 1]) == pr) return 1;
  return 0;
}

void Multiflow::add(const TPath& p, const Rat& w) {
  if (w.is_negative()) throw Error(errc::invalid_argument, "negative path weight");
  if (w.is_zero()) return;
  entries_[p] += w;
}

void Multiflow::set(const TPath& p, const Rat& w) {
  if (w.is_negative()) throw Error(errc::invalid_argument, "negative path weight");
  if (w.is_zero())
    entries_.erase(p);
  else
    entries_[p] = w;
}

Rat Multiflow::weight(const TPath& p) const {
  auto it = entries_.find(p);
  return it == entries_.end() ? Rat(0) : it->second;
}

Rat Multiflow::size() const {
  Rat s;
  for (const auto& [p, w] : entries_) s += w;
  return s;
}

Rat Multiflow::value_between(const NodeId& u, const NodeId& v) const {
  Rat s;
  NodePair want = make_pair_norm(u, v);
  for (const auto& [p, w] : entries_)
    if (p.ends() == want) s += w;
  return s;
}

Rat Multiflow::value_between_sets(const std::set<NodeId>& A,
                                  const std::set<NodeId>& B) const {
  Rat s;
  for (const auto& [p, w] : entries_) {
    const NodeId& a = p.nodes().front();
    const NodeId& b = p.nodes().back();
    if ((A.count(a) && B.count(b)) || (A.count(b) && B.count(a))) s += w;
  }
  return s;
}

CapacityReport check_capacity(const Network& net, const Multiflow& f) {
  std::map<NodePair, Rat> load;
  for (const auto& [p, w] : f.entries()) {
    const auto& nodes = p.nodes();
    for (size_t i = 0; i + 1 < nodes.size(); ++i) {
      NodePair pr = make_pair_norm(nodes[i], nodes[i + 1]);
      if (net.graph().multiplicity(pr.first, pr.second) == 0)
        throw Error(errc::path_not_in_graph,
                    "no edge (" + pr.first + "," + pr.second + ")");
      load[pr] += w;
    }
  }
  CapacityReport rep;
  for (const auto& [pr, l] : load) {
    long long cap = net.graph().multiplicity(pr.first, pr.second);
    if (l > Rat(cap)) {
      rep.ok = false;
      rep.violations.push_back({pr, l, cap});
    }
  }
  return rep;
}

FlowObjective objective(const Multiflow& f, const Network& net, const Clutter& k) {
  FlowObjective o;
  for (const auto& [p, w] : f.entries()) {
    auto [u, v] = p.ends();
    o.size += w;
    switch (classify_pair(k, net.terminals(), u, v)) {
      case PairClass::Strong: o.f_S += w; break;
      case PairClass::Weak: o.f_W += w; break;
      case PairClass::Zero: o.f_zero += w; break;
    }
  }
  o.theta = o.f_S + o.f_W / Rat(2);
  o.size_minus_half_W = o.size - o.f_W / Rat(2);
  o.theta_forms_agree = (o.theta == o.size_minus_half_W);
  return o;
}

FractionalityReport fractionality(const Multiflow& f) {
  FractionalityReport rep;
  for (const auto& [p, w] : f.entries()) {
    rep.lcm_denominator = checked_lcm(rep.lcm_denominator, w.den());
    rep.max_denominator = std::max(rep.max_denominator, w.den());
  }
  return rep;
}

bool locks(const Network& net, const Multiflow& f, const std::set<NodeId>& A) {
  std::set<NodeId> comp;
  for (const auto& t : net.terminals())
    if (!A.count(t)) comp.insert(t);
  Rat carried = f.value_between_sets(A, comp);
  return carried == Rat(lambda(net, A).value);
}

namespace {

// Inclusive node segment of a stored path, reversing when from > to.
std::vector<NodeId> segment(const std::vector<NodeId>& nodes, size_t from, size_t to) {
  std::vector<NodeId> out;
  if (from <= to) {
    for (size_t i = from; i <= to; ++i) out.push_back(nodes[i]);
  } else {
    for (size_t i = from + 1; i-- > to;) out.push_back(nodes[i]);
  }
  return out;
}

size_t position_of(const std::vector<NodeId>& nodes, const NodeId& x) {
  auto it = std::find(nodes.begin(), nodes.end(), x);
  if (it == nodes.end())
    throw Error(errc::invalid_argument, "node '" + x + "' not on path");
  return (size_t)(it - nodes.begin());
}

// Splice a..x with x..b (both inclusive of x).
std::vector<NodeId> splice(std::vector<NodeId> head, const std::vector<NodeId>& tail) {
  head.insert(head.end(), tail.begin() + 1, tail.end());
  return head;
}

}  // namespace

Multiflow switch_paths(const Network& net, const Multiflow& f, const TPath& P,
                       const TPath& Q, const NodeId& x, bool flip_q) {
  (void)net;
  if (P == Q) throw Error(errc::invalid_argument, "switch needs two distinct paths");
  if (!P.is_interior(x) || !Q.is_interior(x))
    throw Error(errc::no_common_inner_node,
                "'" + x + "' is not interior to both paths");
  Rat wp = f.weight(P), wq = f.weight(Q);
  if (wp.is_zero() || wq.is_zero())
    throw Error(errc::invalid_argument, "both paths must carry positive weight");

  std::vector<NodeId> q_nodes = Q.nodes();
  if (flip_q) std::reverse(q_nodes.begin(), q_nodes.end());
  size_t px = position_of(P.nodes(), x);
  size_t qx = position_of(q_nodes, x);
  // K = P'xQ' joins the front segments, L = P''xQ'' the back segments.
  std::vector<NodeId> k_nodes =
      splice(segment(P.nodes(), 0, px), segment(q_nodes, qx, 0));
  std::vector<NodeId> l_nodes = splice(segment(P.nodes(), P.nodes().size() - 1, px),
                                       segment(q_nodes, qx, q_nodes.size() - 1));
  for (const auto* nodes : {&k_nodes, &l_nodes}) {
    if (nodes->front() == nodes->back())
      throw Error(errc::switch_creates_closed_walk,
                  "segment pair ends at " + nodes->front() + " twice");
    if (!node_simple(*nodes))
      throw Error(errc::switch_creates_non_simple_walk, join_nodes(*nodes));
  }

  Rat w = std::min(wp, wq);
  Multiflow out = f;
  out.set(P, wp - w);
  out.set(Q, wq - w);
  out.add(TPath::unchecked(std::move(k_nodes)), w);
  out.add(TPath::unchecked(std::move(l_nodes)), w);
  return out;
}

Multiflow three_halves(const Network& net, const Multiflow& f, const TPath& P,
                       const TPath& Q, const NodeId& x, const Clutter& k,
                       std::optional<Rat> eps_opt) {
  if (!P.is_interior(x) || !Q.is_interior(x))
    throw Error(errc::no_common_inner_node,
                "'" + x + "' is not interior to both paths");
  Rat a = f.weight(P), b = f.weight(Q);
  if (a.is_zero() || b.is_zero())
    throw Error(errc::invalid_argument, "both paths must carry positive weight");

  auto class_of = [&](const NodeId& u, const NodeId& v) -> std::optional<PairClass> {
    if (u == v) return std::nullopt;
    return classify_pair(k, net.terminals(), u, v);
  };

  // Find the labeling p1,p2 of P's ends matching the pattern: (p1,p2),
  // (p1,q1), (p1,q2) weak and (p2,q1), (p2,q2), (q1,q2) strong. The q-ends
  // are symmetric in the pattern, so only p1 needs searching.
  const NodeId& q1 = Q.nodes().front();
  const NodeId& q2 = Q.nodes().back();
  auto matches = [&](const NodeId& p1, const NodeId& p2) {
    auto w1 = class_of(p1, p2), w2 = class_of(p1, q1), w3 = class_of(p1, q2);
    auto s1 = class_of(p2, q1), s2 = class_of(p2, q2), s3 = class_of(q1, q2);
    return w1 == PairClass::Weak && w2 == PairClass::Weak && w3 == PairClass::Weak &&
           s1 == PairClass::Strong && s2 == PairClass::Strong &&
           s3 == PairClass::Strong;
  };
  NodeId p1, p2;
  if (matches(P.nodes().front(), P.nodes().back())) {
    p1 = P.nodes().front();
    p2 = P.nodes().back();
  } else if (matches(P.nodes().back(), P.nodes().front())) {
    p1 = P.nodes().back();
    p2 = P.nodes().front();
  } else {
    throw Error(errc::class_pattern_mismatch,
                "end-pair classes do not match the 3/2 pattern");
  }

  Rat eps;
  if (eps_opt) {
    eps = *eps_opt;
    if (eps.is_negative() || eps > a || eps > Rat(2) * b)
      throw Error(errc::invalid_argument, "eps out of range");
  } else {
    if (a != b)
      throw Error(errc::invalid_argument,
                  "paths must have equal weight (or pass eps explicitly)");
    eps = a;
  }
  if (eps.is_zero()) return f;

  size_t px = position_of(P.nodes(), x);
  size_t qx = position_of(Q.nodes(), x);
  size_t p2_pos = (p2 == P.nodes().front()) ? 0 : P.nodes().size() - 1;
  std::vector<NodeId> r1 =
      splice(segment(P.nodes(), p2_pos, px), segment(Q.nodes(), qx, 0));
  std::vector<NodeId> r2 = splice(segment(P.nodes(), p2_pos, px),
                                  segment(Q.nodes(), qx, Q.nodes().size() - 1));
  for (const auto* nodes : {&r1, &r2})
    if (!node_simple(*nodes))
      throw Error(errc::switch_creates_non_simple_walk, join_nodes(*nodes));

  Rat half_eps = eps / Rat(2);
  Multiflow out = f;
  out.set(P, a - eps);
  out.set(Q, b - half_eps);
  out.add(TPath::unchecked(std::move(r1)), half_eps);
  out.add(TPath::unchecked(std::move(r2)), half_eps);
  return out;
}

std::optional<AugmentingSequence> find_augmenting_sequence(
    const Network& net, const Multiflow& f, const std::set<NodeId>& A) {
  if (A.empty()) throw Error(errc::empty_set, "augmenting sequence of empty set");
  for (const auto& t : A)
    if (!net.is_terminal(t)) throw Error(errc::unknown_terminal, "'" + t + "'");

  // The Karzanov–Lomonosov procedure applies to maximum multiflows only.
  Rat lc;
  for (const auto& t : net.terminals()) lc += Rat(lambda(net, {t}).value, 2);
  if (f.size() != lc)
    throw Error(errc::not_maximum_flow,
                "|f| = " + f.size().str() + " but the maximum is " + lc.str());

  enum class Kind { APath, CrossPath, CompPath, Other };
  struct Entry {
    TPath path;
    Kind kind;
    std::vector<NodeId> oriented;  // cross paths: A-end first
  };
  std::vector<Entry> entries;
  for (const auto& [p, w] : f.entries()) {
    const NodeId& u = p.nodes().front();
    const NodeId& v = p.nodes().back();
    bool ua = A.count(u) > 0, va = A.count(v) > 0;
    Kind kind = Kind::Other;
    if (ua && va)
      kind = Kind::APath;
    else if (!ua && !va)
      kind = Kind::CompPath;
    else
      kind = Kind::CrossPath;
    std::vector<NodeId> oriented = p.nodes();
    if (kind == Kind::CrossPath && !ua) std::reverse(oriented.begin(), oriented.end());
    entries.push_back({p, kind, std::move(oriented)});
  }

  auto inner_positions = [&](const std::vector<NodeId>& nodes, size_t upto) {
    std::vector<std::pair<size_t, NodeId>> out;
    for (size_t i = 1; i + 1 < nodes.size() && i <= upto; ++i)
      if (!net.is_terminal(nodes[i])) out.push_back({i, nodes[i]});
    return out;
  };

  struct Parent {
    int entry = -1;  // -1: reached from an A-path seed
    NodeId link;
  };

  // BFS over cross-path states; state improves when the entry is reached at
  // a larger oriented position (connectors up to that position are allowed).
  std::vector<long long> best_pos(entries.size(), -1);
  std::vector<Parent> parent(entries.size());
  std::deque<int> queue;

  auto finish = [&](int goal_entry, const NodeId& via, int from_entry,
                    const std::vector<int>& seed_of) -> AugmentingSequence {
    AugmentingSequence seq;
    std::vector<int> chain;
    std::vector<NodeId> links;
    chain.push_back(goal_entry);
    links.push_back(via);
    int cur = from_entry;
    while (cur != -1) {
      chain.push_back(cur);
      links.push_back(parent[cur].link);
      cur = parent[cur].entry;
    }
    // links.back() connects the first cross path (or the goal) to its A-path.
    int seed = seed_of[(size_t)chain.back()];
    chain.push_back(seed);
    std::reverse(chain.begin(), chain.end());
    std::reverse(links.begin(), links.end());
    for (int e : chain) seq.paths.push_back(entries[(size_t)e].path);
    seq.links = std::move(links);
    return seq;
  };

  // seed_of[i]: the A-path entry that first reached entry i (for
  // reconstruction when parent chain bottoms out).
  std::vector<int> seed_of(entries.size(), -1);

  // Seed from every A-path through each of its inner nodes.
  for (size_t ai = 0; ai < entries.size(); ++ai) {
    if (entries[ai].kind != Kind::APath) continue;
    auto connectors = inner_positions(entries[ai].oriented, entries[ai].oriented.size());
    for (const auto& [pos, xnode] : connectors) {
      (void)pos;
      for (size_t j = 0; j < entries.size(); ++j) {
        if (j == ai) continue;
        if (entries[j].kind == Kind::CompPath && entries[j].path.is_interior(xnode)) {
          AugmentingSequence seq;
          seq.paths = {entries[ai].path, entries[j].path};
          seq.links = {xnode};
          return seq;
        }
        if (entries[j].kind == Kind::CrossPath && entries[j].path.is_interior(xnode)) {
          long long p = (long long)position_of(entries[j].oriented, xnode);
          if (p > best_pos[j]) {
            best_pos[j] = p;
            parent[j] = {-1, xnode};
            seed_of[j] = (int)ai;
            queue.push_back((int)j);
          }
        }
      }
    }
  }

  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    auto connectors =
        inner_positions(entries[(size_t)cur].oriented, (size_t)best_pos[(size_t)cur]);
    for (const auto& [pos, xnode] : connectors) {
      (void)pos;
      for (size_t j = 0; j < entries.size(); ++j) {
        if ((int)j == cur) continue;
        if (entries[j].kind == Kind::CompPath && entries[j].path.is_interior(xnode))
          return finish((int)j, xnode, cur, seed_of);
        if (entries[j].kind == Kind::CrossPath && entries[j].path.is_interior(xnode)) {
          long long p = (long long)position_of(entries[j].oriented, xnode);
          if (p > best_pos[j]) {
            best_pos[j] = p;
            parent[j] = {cur, xnode};
            seed_of[j] = seed_of[(size_t)cur];
            queue.push_back((int)j);
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

std::vector<EdgeSlot> slots_at(const Network& net, const NodeId& x) {
  std::vector<EdgeSlot> slots;
  for (const auto& [pr, c] : net.graph().edges()) {
    NodeId other;
    if (pr.first == x)
      other = pr.second;
    else if (pr.second == x)
      other = pr.first;
    else
      continue;
    for (long long i = 0; i < c; ++i) slots.push_back({other, (int)i});
  }
  std::sort(slots.begin(), slots.end());
  return slots;
}

void check_split_preconditions(const Network& net, const NodeId& x) {
  if (!net.graph().has_node(x)) throw Error(errc::unknown_node, "node '" + x + "'");
  if (net.is_terminal(x)) throw Error(errc::not_inner, "'" + x + "' is a terminal");
  if (net.degree(x) % 2 != 0)
    throw Error(errc::odd_degree,
                "degree " + std::to_string(net.degree(x)) + " at '" + x + "'");
}

}  // namespace

SplitResult split_node(const Network& net, const NodeId& x, const SlotPairing& pairing) {
  check_split_preconditions(net, x);
  std::vector<EdgeSlot> expected = slots_at(net, x);
  std::vector<EdgeSlot> used;
  for (const auto& [s, t] : pairing.pairs) {
    if (s == t) throw Error(errc::bad_pairing, "slot paired with itself");
    used.push_back(s);
    used.push_back(t);
  }
  std::sort(used.begin(), used.end());
  if (used != expected)
    throw Error(errc::bad_pairing, "pairing does not cover the edge slots at '" + x + "'");

  Multigraph g;
  for (const auto& n : net.graph().nodes())
    if (n != x) g.add_node(n);
  for (const auto& [pr, c] : net.graph().edges())
    if (pr.first != x && pr.second != x) g.add_edge(pr.first, pr.second, c);

  SplitResult out;
  for (const auto& [s, t] : pairing.pairs) {
    if (s.first == t.first) {
      out.dropped_loops.push_back(s.first);
      continue;
    }
    g.add_edge(s.first, t.first, 1);
  }
  out.net = Network(std::move(g), net.terminals(), net.demands());
  return out;
}

std::vector<SlotPairing> enumerate_pairings(const Network& net, const NodeId& x) {
  check_split_preconditions(net, x);
  std::vector<EdgeSlot> slots = slots_at(net, x);
  std::vector<SlotPairing> out;
  std::vector<bool> taken(slots.size(), false);
  SlotPairing current;
  auto rec = [&](auto&& self) -> void {
    size_t first = 0;
    while (first < slots.size() && taken[first]) ++first;
    if (first == slots.size()) {
      out.push_back(current);
      return;
    }
    taken[first] = true;
    for (size_t j = first + 1; j < slots.size(); ++j) {
      if (taken[j]) continue;
      taken[j] = true;
      current.pairs.push_back({slots[first], slots[j]});
      self(self);
      current.pairs.pop_back();
      taken[j] = false;
    }
    taken[first] = false;
  };
  rec(rec);
  return out;
}

std::vector<SplitOption> admissible_splits(const Network& net, const Multiflow& f,
                                           const NodeId& x) {
  std::vector<SlotPairing> pairings = enumerate_pairings(net, x);

  // Transit weight between neighbor pairs; slot assignments within a
  // neighbor class are interchangeable, so only these totals matter.
  std::map<NodePair, Rat> transit;
  for (const auto& [p, w] : f.entries()) {
    const auto& nodes = p.nodes();
    for (size_t i = 1; i + 1 < nodes.size(); ++i)
      if (nodes[i] == x)
        transit[make_pair_norm(nodes[i - 1], nodes[i + 1])] += w;
  }

  std::vector<SplitOption> out;
  for (const auto& pairing : pairings) {
    std::map<NodePair, long long> mu;
    for (const auto& [s, t] : pairing.pairs)
      if (s.first != t.first) ++mu[make_pair_norm(s.first, t.first)];
    Rat destroyed;
    for (const auto& [pr, tw] : transit) {
      Rat cap = Rat(mu.count(pr) ? mu[pr] : 0);
      if (tw > cap) destroyed += tw - cap;
    }
    out.push_back({pairing, destroyed});
  }
  return out;
}

}  // namespace pathpack
