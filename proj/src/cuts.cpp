#include "pathpack/cuts.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace pathpack {

namespace {

// Arc-pair residual graph; undirected edge (u,v,c) becomes one arc pair with
// cap c on both sides and flow(a) = -flow(rev a).
struct FlowGraph {
  struct Arc {
    int to;
    long long cap;
    long long flow;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> adj;

  explicit FlowGraph(int n) : adj(n) {}

  void add_undirected(int u, int v, long long cap) {
    adj[u].push_back((int)arcs.size());
    arcs.push_back({v, cap, 0});
    adj[v].push_back((int)arcs.size());
    arcs.push_back({u, cap, 0});
  }

  void add_directed(int u, int v, long long cap) {
    adj[u].push_back((int)arcs.size());
    arcs.push_back({v, cap, 0});
    adj[v].push_back((int)arcs.size());
    arcs.push_back({u, 0, 0});
  }

  long long residual(int a) const { return arcs[a].cap - arcs[a].flow; }

  long long max_flow(int s, int t) {
    long long total = 0;
    std::vector<int> parent_arc(adj.size());
    for (;;) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      std::queue<int> q;
      q.push(s);
      parent_arc[s] = -2;
      while (!q.empty() && parent_arc[t] == -1) {
        int v = q.front();
        q.pop();
        for (int a : adj[v]) {
          if (residual(a) > 0 && parent_arc[arcs[a].to] == -1) {
            parent_arc[arcs[a].to] = a;
            q.push(arcs[a].to);
          }
        }
      }
      if (parent_arc[t] == -1) break;
      long long delta = std::numeric_limits<long long>::max();
      for (int v = t; v != s;) {
        int a = parent_arc[v];
        delta = std::min(delta, residual(a));
        v = arcs[a ^ 1].to;
      }
      for (int v = t; v != s;) {
        int a = parent_arc[v];
        arcs[a].flow += delta;
        arcs[a ^ 1].flow -= delta;
        v = arcs[a ^ 1].to;
      }
      total += delta;
    }
    return total;
  }

  std::vector<bool> residual_reachable(int s) const {
    std::vector<bool> seen(adj.size(), false);
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int a : adj[v])
        if (residual(a) > 0 && !seen[arcs[a].to]) {
          seen[arcs[a].to] = true;
          q.push(arcs[a].to);
        }
    }
    return seen;
  }
};

}  // namespace

MaxFlowResult max_flow(const Network& net, const std::set<NodeId>& sources,
                       const std::set<NodeId>& sinks) {
  if (sources.empty() || sinks.empty())
    throw Error(errc::bad_partition, "sources and sinks must be nonempty");
  for (const auto& x : sources)
    if (sinks.count(x))
      throw Error(errc::bad_partition, "node '" + x + "' is both source and sink");
  for (const auto& x : sources)
    if (!net.graph().has_node(x)) throw Error(errc::unknown_node, "node '" + x + "'");
  for (const auto& x : sinks)
    if (!net.graph().has_node(x)) throw Error(errc::unknown_node, "node '" + x + "'");

  std::vector<NodeId> names(net.graph().nodes().begin(), net.graph().nodes().end());
  auto index_of = [&](const NodeId& x) {
    return (int)(std::lower_bound(names.begin(), names.end(), x) - names.begin());
  };
  int n = (int)names.size();
  int super_s = n, super_t = n + 1;
  FlowGraph fg(n + 2);
  long long inf = 1;
  for (const auto& [pr, c] : net.graph().edges()) {
    fg.add_undirected(index_of(pr.first), index_of(pr.second), c);
    inf += c;
  }
  for (const auto& x : sources) fg.add_directed(super_s, index_of(x), inf);
  for (const auto& x : sinks) fg.add_directed(index_of(x), super_t, inf);

  MaxFlowResult res;
  res.value = fg.max_flow(super_s, super_t);
  auto reach = fg.residual_reachable(super_s);
  for (int i = 0; i < n; ++i)
    if (reach[i]) res.source_side.insert(names[i]);
  return res;
}

LambdaResult lambda(const Network& net, const std::set<NodeId>& A) {
  if (A.empty()) throw Error(errc::empty_set, "lambda of empty terminal set");
  for (const auto& t : A)
    if (!net.is_terminal(t)) throw Error(errc::unknown_terminal, "'" + t + "'");

  LambdaResult res;
  if (A == net.terminals()) {
    // min over X ⊇ T; X = N gives the empty cut.
    res.value = 0;
    res.cut.terminal_side = A;
    res.cut.node_set = net.graph().nodes();
    res.cut.value = 0;
    return res;
  }
  std::set<NodeId> rest;
  for (const auto& t : net.terminals())
    if (!A.count(t)) rest.insert(t);
  MaxFlowResult mf = max_flow(net, A, rest);
  res.value = mf.value;
  res.cut.terminal_side = A;
  res.cut.node_set = mf.source_side;
  res.cut.value = mf.value;
  return res;
}

Rat beta(const Network& net, const std::set<NodeId>& A) {
  if (A.empty()) throw Error(errc::empty_set, "beta of empty terminal set");
  long long singles = 0;
  for (const auto& t : A) singles += lambda(net, {t}).value;
  long long lam = lambda(net, A).value;
  Rat b = Rat(singles - lam, 2);
  if (net.is_eulerian() && !b.is_integer())
    throw Error(errc::invalid_argument,
                "beta not integral on an Eulerian network (parity violated)");
  return b;
}

}  // namespace pathpack
