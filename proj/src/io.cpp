#include "pathpack/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace pathpack {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

long long parse_int_at_least(const std::string& tok, long long min_value, int line_no) {
  long long v = 0;
  auto r = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (r.ec != std::errc() || r.ptr != tok.data() + tok.size() || v < min_value)
    throw Error(errc::parse_error, "expected integer >= " + std::to_string(min_value) +
                                       ", got '" + tok + "'",
                line_no);
  return v;
}

}  // namespace

ParsedNetwork parse_network(const std::string& text) {
  Multigraph g;
  std::set<NodeId> terminals;
  std::set<NodePair> demands;
  std::vector<std::set<NodeId>> members;
  bool saw_demand = false, saw_anticlique = false;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "terminal") {
      if (tok.size() != 2) throw Error(errc::parse_error, "terminal <name>", line_no);
      g.add_node(tok[1]);
      terminals.insert(tok[1]);
    } else if (kw == "edge") {
      if (tok.size() != 3 && tok.size() != 4)
        throw Error(errc::parse_error, "edge <u> <v> [mult]", line_no);
      long long mult = tok.size() == 4 ? parse_int_at_least(tok[3], 1, line_no) : 1;
      if (tok[1] == tok[2])
        throw Error(errc::parse_error, "self-loop edge at '" + tok[1] + "'", line_no);
      g.add_edge(tok[1], tok[2], mult);
    } else if (kw == "demand") {
      if (tok.size() != 3) throw Error(errc::parse_error, "demand <t1> <t2>", line_no);
      saw_demand = true;
      if (tok[1] == tok[2])
        throw Error(errc::parse_error, "demand pair repeats '" + tok[1] + "'", line_no);
      demands.insert(make_pair_norm(tok[1], tok[2]));
    } else if (kw == "anticlique") {
      if (tok.size() < 2)
        throw Error(errc::parse_error, "anticlique <t1> [t2 ...]", line_no);
      saw_anticlique = true;
      members.push_back(std::set<NodeId>(tok.begin() + 1, tok.end()));
    } else {
      throw Error(errc::parse_error, "unknown directive '" + kw + "'", line_no);
    }
  }
  if (saw_demand && saw_anticlique)
    throw Error(errc::inconsistent_style,
                "file mixes demand and anticlique directives");

  for (const auto& [a, b] : demands) {
    if (!terminals.count(a) || !terminals.count(b))
      throw Error(errc::parse_error,
                  "demand endpoint not declared terminal: (" + a + "," + b + ")", 0);
  }
  for (const auto& m : members)
    for (const auto& t : m)
      if (!terminals.count(t))
        throw Error(errc::parse_error,
                    "anticlique member not declared terminal: '" + t + "'", 0);

  ParsedNetwork out{Network(std::move(g), std::move(terminals), std::move(demands)),
                    std::nullopt};
  if (saw_anticlique) out.clutter = normalize_clutter(std::move(members));
  return out;
}

Instance resolve_instance(const ParsedNetwork& parsed, int terminal_limit) {
  Instance inst;
  if (parsed.clutter) {
    // Anticlique style: S is the set of pairs covered by no member.
    std::set<NodePair> demands =
        strong_pairs(*parsed.clutter, parsed.net.terminals());
    inst.net = Network(parsed.net.graph(), parsed.net.terminals(), demands);
    inst.clutter = *parsed.clutter;
  } else {
    inst.net = parsed.net;
    inst.clutter =
        anticliques(parsed.net.terminals(), parsed.net.demands(), terminal_limit);
  }
  return inst;
}

std::string print_network(const Instance& inst, bool anticlique_style) {
  std::ostringstream out;
  for (const auto& t : inst.net.terminals()) out << "terminal " << t << "\n";
  for (const auto& [pr, c] : inst.net.graph().edges())
    out << "edge " << pr.first << " " << pr.second << " " << c << "\n";
  if (anticlique_style) {
    for (const auto& m : inst.clutter.members) {
      out << "anticlique";
      for (const auto& t : m) out << " " << t;
      out << "\n";
    }
  } else {
    for (const auto& [a, b] : inst.net.demands()) out << "demand " << a << " " << b << "\n";
  }
  return out.str();
}

std::string print_solution(const Solution& sol) {
  std::ostringstream out;
  out << "problem " << sol.problem << "\n";
  out << "mode " << sol.mode << "\n";
  out << "value " << sol.value.str() << "\n";
  for (const auto& [p, w] : sol.flow.entries()) {
    out << "path " << w.str();
    for (const auto& n : p.nodes()) out << " " << n;
    out << "\n";
  }
  for (const auto& c : sol.cuts) {
    out << "cut";
    for (const auto& t : c.terminal_side) out << " " << t;
    out << " |";
    for (const auto& n : c.node_set) out << " " << n;
    out << " " << c.value << "\n";
  }
  for (const auto& x : sol.expansions) {
    for (const auto& [t, block] : x.blocks) {
      out << "expansion " << t << " :";
      for (const auto& n : block) out << " " << n;
      out << "\n";
    }
  }
  return out.str();
}

Solution parse_solution(const std::string& text, const Network& net) {
  Solution sol;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::map<NodeId, std::set<NodeId>> blocks;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "problem") {
      if (tok.size() != 2 || (tok[1] != "s" && tok[1] != "w"))
        throw Error(errc::parse_error, "problem <s|w>", line_no);
      sol.problem = tok[1];
    } else if (kw == "mode") {
      if (tok.size() != 2) throw Error(errc::parse_error, "mode <lp|scaled:D>", line_no);
      sol.mode = tok[1];
    } else if (kw == "value") {
      if (tok.size() != 2) throw Error(errc::parse_error, "value <num>/<den>", line_no);
      sol.value = Rat::parse(tok[1]);
    } else if (kw == "path") {
      if (tok.size() < 4)
        throw Error(errc::parse_error, "path <weight> v0 v1 [...]", line_no);
      Rat w = Rat::parse(tok[1]);
      std::vector<NodeId> nodes(tok.begin() + 2, tok.end());
      sol.flow.add(TPath(std::move(nodes), net), w);
    } else if (kw == "cut") {
      auto bar = std::find(tok.begin(), tok.end(), "|");
      if (bar == tok.end() || bar + 1 == tok.end())
        throw Error(errc::parse_error, "cut <A...> | <X...> <value>", line_no);
      CutCertificate c;
      c.terminal_side.insert(tok.begin() + 1, bar);
      c.node_set.insert(bar + 1, tok.end() - 1);
      c.value = parse_int_at_least(tok.back(), 0, line_no);
      sol.cuts.push_back(std::move(c));
    } else if (kw == "expansion") {
      auto colon = std::find(tok.begin(), tok.end(), ":");
      if (tok.size() < 4 || colon != tok.begin() + 2)
        throw Error(errc::parse_error, "expansion <t> : <nodes...>", line_no);
      blocks[tok[1]] = std::set<NodeId>(tok.begin() + 3, tok.end());
    } else {
      throw Error(errc::parse_error, "unknown directive '" + kw + "'", line_no);
    }
  }
  if (!blocks.empty()) {
    Expansion x;
    x.blocks = std::move(blocks);
    sol.expansions.push_back(std::move(x));
  }
  return sol;
}

}  // namespace pathpack
