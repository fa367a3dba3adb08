#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pathpack/netmodel.hpp"
#include "pathpack/rational.hpp"

namespace pathpack {

// Family of anticliques (inclusion-maximal stable sets of the demand graph).
// Members are kept sorted; no member may contain another.
struct Clutter {
  std::vector<std::set<NodeId>> members;

  bool operator==(const Clutter&) const = default;
  // Number of members containing both u and v.
  int coverage(const NodeId& u, const NodeId& v) const;
};

Clutter normalize_clutter(std::vector<std::set<NodeId>> members);

enum class PairClass { Strong, Weak, Zero };

const char* pair_class_name(PairClass c);

struct KClutterWitness {
  std::set<NodeId> a, b, c;
};

struct AtomPartition {
  std::vector<std::set<NodeId>> blocks;  // sorted by least element
  bool simple = false;                   // every atom a singleton
};

struct KNetworkReport {
  bool anticliques_match = false;
  bool clutter_ok = false;  // Eq-(3) triple condition
  bool eulerian = false;
  std::optional<KClutterWitness> witness;
  std::vector<std::string> notes;

  bool is_k_network() const { return anticliques_match && clutter_ok && eulerian; }
};

struct CompressedInstance {
  Network net;
  Clutter clutter;
  std::map<NodeId, NodeId> representative;  // original terminal -> merged name
};

// All inclusion-maximal subsets of T spanning no S-pair. Enumeration is
// exponential in |T|; beyond terminal_limit it refuses with
// TerminalLimitExceeded rather than guessing.
Clutter anticliques(const std::set<NodeId>& terminals,
                    const std::set<NodePair>& demands, int terminal_limit = 16);

// Eq-(3) condition: every triple of distinct pairwise-intersecting members
// has all three pairwise intersections equal.
bool is_k_clutter(const Clutter& k, KClutterWitness* witness = nullptr);

PairClass classify_pair(const Clutter& k, const std::set<NodeId>& terminals,
                        const NodeId& u, const NodeId& v);

// W-metric value of a terminal pair: 1, 1/2 or 0.
Rat pair_weight_w(const Clutter& k, const std::set<NodeId>& terminals,
                  const NodeId& u, const NodeId& v);

AtomPartition atoms(const Clutter& k, const std::set<NodeId>& terminals);

// Merge each atom into a single terminal (named by its least member). Edge
// multiplicities between merged groups are summed; edges inside a group are
// dropped. S and the clutter are rewritten over representatives.
CompressedInstance compress_atoms(const Network& net, const Clutter& k);

KNetworkReport validate_k_network(const Network& net, const Clutter& k,
                                  int terminal_limit = 16);

// S derived from a clutter: pairs covered by no member.
std::set<NodePair> strong_pairs(const Clutter& k, const std::set<NodeId>& terminals);

}  // namespace pathpack
