#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pathpack/error.hpp"

namespace pathpack {

using NodeId = std::string;
using NodePair = std::pair<NodeId, NodeId>;  // normalized: first < second

inline NodePair make_pair_norm(const NodeId& a, const NodeId& b) {
  return a < b ? NodePair{a, b} : NodePair{b, a};
}

// Undirected multigraph: parallel edges are stored as a multiplicity per
// unordered node pair. Self-loops are rejected at construction; they cannot
// appear on an unclosed T-path and would only obscure Eulerian parity.
class Multigraph {
 public:
  void add_node(const NodeId& x);
  // Accumulates mult onto c(u,v). u == v or mult < 0 is an error.
  void add_edge(const NodeId& u, const NodeId& v, long long mult = 1);
  void set_multiplicity(const NodeId& u, const NodeId& v, long long mult);

  bool has_node(const NodeId& x) const { return nodes_.count(x) > 0; }
  long long multiplicity(const NodeId& u, const NodeId& v) const;
  long long degree(const NodeId& x) const;

  const std::set<NodeId>& nodes() const { return nodes_; }
  // Positive-multiplicity pairs in lexicographic order.
  const std::map<NodePair, long long>& edges() const { return mult_; }

  std::vector<NodeId> neighbors(const NodeId& x) const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.nodes_ == b.nodes_ && a.mult_ == b.mult_;
  }

 private:
  std::set<NodeId> nodes_;
  std::map<NodePair, long long> mult_;
};

// A network is a multigraph plus a terminal set T and a demand set S of
// unordered terminal pairs. Non-terminal nodes are "inner".
class Network {
 public:
  Network() = default;
  Network(Multigraph g, std::set<NodeId> terminals, std::set<NodePair> demands);

  const Multigraph& graph() const { return graph_; }
  const std::set<NodeId>& terminals() const { return terminals_; }
  const std::set<NodePair>& demands() const { return demands_; }

  bool is_terminal(const NodeId& x) const { return terminals_.count(x) > 0; }
  std::vector<NodeId> inner_nodes() const;

  long long degree(const NodeId& x) const;
  // d(X): total multiplicity of edges with exactly one end in X.
  long long cut_degree(const std::set<NodeId>& X) const;
  // True iff every inner node has even degree.
  bool is_eulerian() const;

  friend bool operator==(const Network& a, const Network& b) {
    return a.graph_ == b.graph_ && a.terminals_ == b.terminals_ &&
           a.demands_ == b.demands_;
  }

 private:
  Multigraph graph_;
  std::set<NodeId> terminals_;
  std::set<NodePair> demands_;
};

}  // namespace pathpack
