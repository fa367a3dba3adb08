#include "pathpack/netmodel.hpp"

#include <algorithm>

namespace pathpack {

void Multigraph::add_node(const NodeId& x) {
  if (x.empty()) throw Error(errc::invalid_argument, "empty node name");
  nodes_.insert(x);
}

void Multigraph::add_edge(const NodeId& u, const NodeId& v, long long mult) {
  if (u == v) throw Error(errc::invalid_argument, "self-loop at '" + u + "'");
  if (mult < 0) throw Error(errc::invalid_argument, "negative multiplicity");
  add_node(u);
  add_node(v);
  if (mult == 0) return;
  mult_[make_pair_norm(u, v)] += mult;
}

void Multigraph::set_multiplicity(const NodeId& u, const NodeId& v, long long mult) {
  if (u == v) throw Error(errc::invalid_argument, "self-loop at '" + u + "'");
  if (mult < 0) throw Error(errc::invalid_argument, "negative multiplicity");
  add_node(u);
  add_node(v);
  if (mult == 0)
    mult_.erase(make_pair_norm(u, v));
  else
    mult_[make_pair_norm(u, v)] = mult;
}

long long Multigraph::multiplicity(const NodeId& u, const NodeId& v) const {
  if (u == v) return 0;
  auto it = mult_.find(make_pair_norm(u, v));
  return it == mult_.end() ? 0 : it->second;
}

long long Multigraph::degree(const NodeId& x) const {
  if (!has_node(x)) throw Error(errc::unknown_node, "node '" + x + "'");
  long long d = 0;
  for (const auto& [pr, c] : mult_)
    if (pr.first == x || pr.second == x) d += c;
  return d;
}

std::vector<NodeId> Multigraph::neighbors(const NodeId& x) const {
  if (!has_node(x)) throw Error(errc::unknown_node, "node '" + x + "'");
  std::vector<NodeId> out;
  for (const auto& [pr, c] : mult_) {
    if (c <= 0) continue;
    if (pr.first == x) out.push_back(pr.second);
    if (pr.second == x) out.push_back(pr.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Network::Network(Multigraph g, std::set<NodeId> terminals, std::set<NodePair> demands)
    : graph_(std::move(g)), terminals_(std::move(terminals)), demands_(std::move(demands)) {
  for (const auto& t : terminals_) {
    if (!graph_.has_node(t)) graph_.add_node(t);
  }
  std::set<NodePair> normalized;
  for (const auto& [a, b] : demands_) {
    if (a == b) throw Error(errc::same_terminal, "demand pair (" + a + "," + b + ")");
    if (!terminals_.count(a) || !terminals_.count(b))
      throw Error(errc::unknown_terminal, "demand pair (" + a + "," + b + ")");
    normalized.insert(make_pair_norm(a, b));
  }
  demands_ = std::move(normalized);
}

std::vector<NodeId> Network::inner_nodes() const {
  std::vector<NodeId> out;
  for (const auto& x : graph_.nodes())
    if (!terminals_.count(x)) out.push_back(x);
  return out;
}

long long Network::degree(const NodeId& x) const { return graph_.degree(x); }

long long Network::cut_degree(const std::set<NodeId>& X) const {
  for (const auto& x : X)
    if (!graph_.has_node(x)) throw Error(errc::unknown_node, "node '" + x + "'");
  long long d = 0;
  for (const auto& [pr, c] : graph_.edges()) {
    bool a = X.count(pr.first) > 0;
    bool b = X.count(pr.second) > 0;
    if (a != b) d += c;
  }
  return d;
}

bool Network::is_eulerian() const {
  for (const auto& x : graph_.nodes())
    if (!terminals_.count(x) && graph_.degree(x) % 2 != 0) return false;
  return true;
}

}  // namespace pathpack
