#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pathpack/cuts.hpp"
#include "pathpack/demand.hpp"
#include "pathpack/duality.hpp"
#include "pathpack/flows.hpp"
#include "pathpack/netmodel.hpp"

namespace pathpack {

struct Instance {
  Network net;
  Clutter clutter;
};

struct ParsedNetwork {
  Network net;
  std::optional<Clutter> clutter;  // present for anticlique-style files
};

// Line-based network files: `terminal`, `edge u v [mult]`, `demand a b`,
// `anticlique a b ...`, `#` comments. Demand-style and anticlique-style are
// mutually exclusive (InconsistentStyle).
ParsedNetwork parse_network(const std::string& text);

// Derives whichever of S / clutter the file omitted.
Instance resolve_instance(const ParsedNetwork& parsed, int terminal_limit = 16);

std::string print_network(const Instance& inst, bool anticlique_style = false);

struct Solution {
  std::string problem;  // "s" or "w"
  std::string mode;     // "lp" or "scaled:D"
  Rat value;
  Multiflow flow;
  std::vector<CutCertificate> cuts;
  std::vector<Expansion> expansions;

  bool operator==(const Solution&) const = default;
};

std::string print_solution(const Solution& sol);
// Paths are validated against the instance's graph.
Solution parse_solution(const std::string& text, const Network& net);

}  // namespace pathpack
