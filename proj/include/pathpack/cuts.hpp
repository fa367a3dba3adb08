#pragma once

#include <set>

#include "pathpack/netmodel.hpp"
#include "pathpack/rational.hpp"

namespace pathpack {

struct CutCertificate {
  std::set<NodeId> terminal_side;  // A = X ∩ T
  std::set<NodeId> node_set;       // X
  long long value = 0;             // d(X)

  bool operator==(const CutCertificate&) const = default;
};

struct MaxFlowResult {
  long long value = 0;
  std::set<NodeId> source_side;  // min-cut witness X, sources ⊆ X
};

// Max-flow between node sets with capacities given by edge multiplicities.
// value = min d(X) over X ⊇ sources with X ∩ sinks = ∅.
MaxFlowResult max_flow(const Network& net, const std::set<NodeId>& sources,
                       const std::set<NodeId>& sinks);

struct LambdaResult {
  long long value = 0;
  CutCertificate cut;
};

// λ(A) = min{d(X) : X ∩ T = A}. A = T is allowed; the minimum is then taken
// over X ⊇ T, attained by X = N with d = 0.
LambdaResult lambda(const Network& net, const std::set<NodeId>& A);

// β(A) = (Σ_{t∈A} λ({t}) − λ(A)) / 2. Integral in Eulerian networks (the
// parity argument is asserted); exact rational otherwise.
Rat beta(const Network& net, const std::set<NodeId>& A);

}  // namespace pathpack
