#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "pathpack/cuts.hpp"
#include "pathpack/demand.hpp"
#include "pathpack/netmodel.hpp"
#include "pathpack/rational.hpp"

namespace pathpack {

// Unclosed node-simple path with distinct terminal ends. Stored in canonical
// orientation (lexicographically smaller end first) so that a path and its
// reversal compare equal.
class TPath {
 public:
  TPath(std::vector<NodeId> nodes, const Network& net);
  // Trusts the sequence; used by transformations that splice validated paths.
  static TPath unchecked(std::vector<NodeId> nodes);

  const std::vector<NodeId>& nodes() const { return nodes_; }
  size_t length() const { return nodes_.size() - 1; }  // edge count
  NodePair ends() const { return make_pair_norm(nodes_.front(), nodes_.back()); }

  bool contains(const NodeId& x) const;
  bool is_interior(const NodeId& x) const;
  // No terminal other than the two ends.
  bool is_simple(const Network& net) const;
  // 1 if the path traverses the adjacent pair, else 0 (node-simple paths
  // cannot traverse a pair twice).
  int traversals(const NodePair& pr) const;

  auto operator<=>(const TPath& o) const { return nodes_ <=> o.nodes_; }
  bool operator==(const TPath& o) const { return nodes_ == o.nodes_; }

 private:
  TPath() = default;
  std::vector<NodeId> nodes_;
};

// Finite map path -> positive exact weight.
class Multiflow {
 public:
  void add(const TPath& p, const Rat& w);
  void set(const TPath& p, const Rat& w);
  Rat weight(const TPath& p) const;

  const std::map<TPath, Rat>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  Rat size() const;  // |f|
  // Total weight of paths with the given unordered end-pair.
  Rat value_between(const NodeId& u, const NodeId& v) const;
  // f[A,B]: one end in A, the other in B (f[A] when A == B).
  Rat value_between_sets(const std::set<NodeId>& A, const std::set<NodeId>& B) const;

  bool operator==(const Multiflow&) const = default;

 private:
  std::map<TPath, Rat> entries_;
};

struct CapacityViolation {
  NodePair pair;
  Rat load;
  long long capacity = 0;
};

struct CapacityReport {
  bool ok = true;
  std::vector<CapacityViolation> violations;
};

CapacityReport check_capacity(const Network& net, const Multiflow& f);

struct FlowObjective {
  Rat size;               // |f|
  Rat f_S;                // weight on strong pairs
  Rat f_W;                // weight on weak pairs
  Rat f_zero;             // weight on zero pairs
  Rat theta;              // f[S] + f[W]/2
  Rat size_minus_half_W;  // |f| − f[W]/2; equals theta iff no zero paths
  bool theta_forms_agree = false;
};

FlowObjective objective(const Multiflow& f, const Network& net, const Clutter& k);

struct FractionalityReport {
  long long lcm_denominator = 1;   // least D with D·f integral
  long long max_denominator = 1;   // largest single weight denominator
};

FractionalityReport fractionality(const Multiflow& f);

// f locks A iff f[A, T∖A] = λ(A).
bool locks(const Network& net, const Multiflow& f, const std::set<NodeId>& A);

// Switching P and Q at a shared inner node x: P'xP'', Q'xQ'' become P'xQ'
// and P''xQ''. The pairing depends on Q's traversal direction; flip_q selects
// the other of the two possible switches at x. Unequal weights split the
// heavier path first; identical resulting paths are merged.
Multiflow switch_paths(const Network& net, const Multiflow& f, const TPath& P,
                       const TPath& Q, const NodeId& x, bool flip_q = false);

// The 3/2-operation. With ends p1,p2 / q1,q2 where (p1,·) pairs are weak and
// (p2,q1),(p2,q2),(q1,q2) strong, P and Q (weights a, b) become
//   p2..x..q1 and p2..x..q2 at eps/2, Q at b−eps/2, P at a−eps.
// Default eps = w(P) (requires equal weights) reproduces the full operation:
// three half-weight strong paths. Theta is preserved; f[S] gains eps/2.
Multiflow three_halves(const Network& net, const Multiflow& f, const TPath& P,
                       const TPath& Q, const NodeId& x, const Clutter& k,
                       std::optional<Rat> eps = std::nullopt);

struct AugmentingSequence {
  std::vector<TPath> paths;   // P1..Pn
  std::vector<NodeId> links;  // x1..x(n-1)
};

// Karzanov–Lomonosov certificate that a maximum multiflow unlocks A.
// Requires |f| equal to the Lovász–Cherkassky value (NotMaximumFlow else).
std::optional<AugmentingSequence> find_augmenting_sequence(
    const Network& net, const Multiflow& f, const std::set<NodeId>& A);

// One endpoint slot of an edge at the split node: (neighbor, copy index).
using EdgeSlot = std::pair<NodeId, int>;

struct SlotPairing {
  std::vector<std::pair<EdgeSlot, EdgeSlot>> pairs;
};

struct SplitResult {
  Network net;
  // Slot pairs joining two slots toward the same neighbor would form a
  // self-loop; they are dropped and reported here.
  std::vector<NodeId> dropped_loops;
};

SplitResult split_node(const Network& net, const NodeId& x, const SlotPairing& pairing);

// All labeled perfect matchings of the edge slots at x. (d-1)!! pairings for
// degree d.
std::vector<SlotPairing> enumerate_pairings(const Network& net, const NodeId& x);

struct SplitOption {
  SlotPairing pairing;
  Rat destroyed_weight;  // f-weight whose transit through x is incompatible
};

// Every pairing with the weight it destroys; destroyed 0 means an f-split.
std::vector<SplitOption> admissible_splits(const Network& net, const Multiflow& f,
                                           const NodeId& x);

}  // namespace pathpack
