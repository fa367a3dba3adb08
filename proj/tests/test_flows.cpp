#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pathpack/flows.hpp"
#include "pathpack/generator.hpp"
#include "pathpack/solve.hpp"
#include "testutil.hpp"

using namespace pathpack;
using testutil::path_of;

namespace {

// a1,a2 | b1,b2 around an inner degree-4 center; demands join the groups, so
// K = {{a1,a2},{b1,b2}}. One switch at x locks {a1,a2}.
Instance cross_star() {
  Multigraph g;
  for (const auto& t : {"a1", "a2", "b1", "b2"}) g.add_edge(t, "x");
  std::set<NodeId> terms{"a1", "a2", "b1", "b2"};
  std::set<NodePair> demands{{"a1", "b1"}, {"a1", "b2"}, {"a2", "b1"}, {"a2", "b2"}};
  Instance inst;
  inst.net = Network(std::move(g), terms, demands);
  inst.clutter = anticliques(terms, demands);
  return inst;
}

Multiflow c4_optimal_s_flow(const Instance& c4) {
  Multiflow f;
  f.add(path_of(c4, {"s1", "s2", "t1"}), Rat(1, 2));
  f.add(path_of(c4, {"s1", "t2", "t1"}), Rat(1, 2));
  f.add(path_of(c4, {"s2", "s1", "t2"}), Rat(1, 2));
  f.add(path_of(c4, {"s2", "t1", "t2"}), Rat(1, 2));
  return f;
}

}  // namespace

TEST_CASE("TPath validation and canonical orientation") {
  auto c4 = testutil::c4();
  TPath p = path_of(c4, {"t1", "s2", "s1"});
  CHECK(p.nodes() == std::vector<NodeId>{"s1", "s2", "t1"});  // reversed to canon
  CHECK(p.ends() == make_pair_norm("s1", "t1"));
  CHECK(p.length() == 2);
  CHECK_FALSE(p.is_simple(c4.net));  // s2 is an interior terminal

  auto sxt = testutil::sxt();
  CHECK(path_of(sxt, {"s", "x", "t"}).is_simple(sxt.net));

  CHECK_THROWS_AS(path_of(c4, {"s1"}), Error);
  CHECK_THROWS_AS(path_of(c4, {"s1", "t1"}), Error);         // no such edge
  CHECK_THROWS_AS(path_of(c4, {"s1", "s2", "s1"}), Error);   // repeats a node
  CHECK_THROWS_AS(path_of(sxt, {"s", "x"}), Error);          // end not terminal
  CHECK_THROWS_AS(TPath({"s", "x", "zz"}, sxt.net), Error);  // unknown node
}

TEST_CASE("check_capacity") {
  auto sxt = testutil::sxt();
  Multiflow f;
  CHECK(check_capacity(sxt.net, f).ok);  // empty flow

  TPath p = path_of(sxt, {"s", "x", "t"});
  f.add(p, Rat(1, 2));
  f.add(p, Rat(1, 2));  // merges to weight 1
  CHECK(f.entries().size() == 1);
  CHECK(check_capacity(sxt.net, f).ok);

  f.add(p, Rat(1, 2));  // load 3/2 on unit edges
  auto rep = check_capacity(sxt.net, f);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.violations.size() == 2);
  CHECK(rep.violations[0].load == Rat(3, 2));
  CHECK(rep.violations[0].capacity == 1);
}

TEST_CASE("objective") {
  auto c4 = testutil::c4();
  Multiflow empty;
  auto o0 = objective(empty, c4.net, c4.clutter);
  CHECK(o0.theta == Rat(0));
  CHECK(o0.size == Rat(0));
  CHECK(o0.theta_forms_agree);

  Multiflow one;
  one.add(path_of(c4, {"s1", "s2", "t1"}), Rat(1, 2));  // strong end-pair
  auto o1 = objective(one, c4.net, c4.clutter);
  CHECK(o1.theta == Rat(1, 2));
  CHECK(o1.f_S == Rat(1, 2));

  Multiflow weak;  // four single-edge weak paths, weight 1 each
  for (auto e : {std::pair<const char*, const char*>{"s1", "s2"},
                 {"s2", "t1"},
                 {"t1", "t2"},
                 {"s1", "t2"}})
    weak.add(path_of(c4, {e.first, e.second}), Rat(1));
  auto o2 = objective(weak, c4.net, c4.clutter);
  CHECK(o2.f_W == Rat(4));
  CHECK(o2.f_S == Rat(0));
  CHECK(o2.theta == Rat(2));
  CHECK(o2.size_minus_half_W == o2.theta);
  CHECK(o2.theta_forms_agree);
}

TEST_CASE("objective flags zero paths") {
  // clutter {{a,b,c},{b,c,d}} makes (b,c) a zero pair
  Multigraph g;
  g.add_edge("b", "c");
  std::set<NodeId> T{"a", "b", "c", "d"};
  Network net(g, T, {});
  Clutter k = normalize_clutter({{"a", "b", "c"}, {"b", "c", "d"}});
  Multiflow f;
  f.add(TPath({"b", "c"}, net), Rat(1));
  auto o = objective(f, net, k);
  CHECK(o.f_zero == Rat(1));
  CHECK(o.theta == Rat(0));
  CHECK(o.size_minus_half_W == Rat(1));
  CHECK_FALSE(o.theta_forms_agree);
}

TEST_CASE("fractionality") {
  auto c4 = testutil::c4();
  Multiflow f;
  f.add(path_of(c4, {"s1", "s2"}), Rat(1));
  f.add(path_of(c4, {"t1", "t2"}), Rat(1));
  CHECK(fractionality(f).lcm_denominator == 1);

  Multiflow h;
  h.add(path_of(c4, {"s1", "s2"}), Rat(1, 2));
  h.add(path_of(c4, {"t1", "t2"}), Rat(1, 2));
  CHECK(fractionality(h).lcm_denominator == 2);

  Multiflow m;
  m.add(path_of(c4, {"s1", "s2"}), Rat(1, 2));
  m.add(path_of(c4, {"t1", "t2"}), Rat(1, 3));
  auto rep = fractionality(m);
  CHECK(rep.lcm_denominator == 6);
  CHECK(rep.max_denominator == 3);

  // scaling by the lcm makes the flow integral
  Multiflow scaled;
  for (const auto& [p, w] : m.entries()) scaled.add(p, w * Rat(rep.lcm_denominator));
  CHECK(fractionality(scaled).lcm_denominator == 1);
}

TEST_CASE("locks") {
  auto c4 = testutil::c4();
  Multiflow f = c4_optimal_s_flow(c4);
  REQUIRE(check_capacity(c4.net, f).ok);
  CHECK(locks(c4.net, f, {"s1", "s2"}));  // f[A,A^c] = 2 = lambda

  Multiflow empty;
  CHECK_FALSE(locks(c4.net, empty, {"s1", "s2"}));

  // disconnected pair: lambda(A) = 0, empty flow locks
  Multigraph g;
  g.add_node("u");
  g.add_node("v");
  Network net(g, {"u", "v"}, {});
  CHECK(locks(net, empty, {"u"}));
}

TEST_CASE("switch: the defining example") {
  // P=(a,x,b), Q=(c,x,d), weight 1/2 each -> (a,x,c),(b,x,d) at 1/2
  Multigraph g;
  for (auto t : {"a", "b", "c", "d"}) g.add_edge(t, "x");
  Network net(g, {"a", "b", "c", "d"}, {});
  Multiflow f;
  TPath P({"a", "x", "b"}, net), Q({"c", "x", "d"}, net);
  f.add(P, Rat(1, 2));
  f.add(Q, Rat(1, 2));
  Multiflow out = switch_paths(net, f, P, Q, "x");
  CHECK(out.weight(TPath({"a", "x", "c"}, net)) == Rat(1, 2));
  CHECK(out.weight(TPath({"b", "x", "d"}, net)) == Rat(1, 2));
  CHECK(out.entries().size() == 2);
  CHECK(out.size() == f.size());

  // collapsing end-pair
  Multigraph g2;
  g2.add_edge("a", "x", 2);
  g2.add_edge("b", "x");
  g2.add_edge("d", "x");
  Network net2(g2, {"a", "b", "d"}, {});
  Multiflow f2;
  TPath P2({"a", "x", "b"}, net2), Q2({"a", "x", "d"}, net2);
  f2.add(P2, Rat(1));
  f2.add(Q2, Rat(1));
  try {
    switch_paths(net2, f2, P2, Q2, "x");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::switch_creates_closed_walk);
  }

  // P=(a,x,y,b), Q=(c,y,x,d) at x: the flipped pairing repeats y, while the
  // other orientation yields two valid paths
  Multigraph g3;
  g3.add_edge("a", "x");
  g3.add_edge("x", "y", 2);
  g3.add_edge("y", "b");
  g3.add_edge("c", "y");
  g3.add_edge("x", "d");
  Network net3(g3, {"a", "b", "c", "d"}, {});
  Multiflow f3;
  TPath P3({"a", "x", "y", "b"}, net3), Q3({"c", "y", "x", "d"}, net3);
  f3.add(P3, Rat(1, 2));
  f3.add(Q3, Rat(1, 2));
  try {
    switch_paths(net3, f3, P3, Q3, "x", true);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::switch_creates_non_simple_walk);
  }
  Multiflow ok3 = switch_paths(net3, f3, P3, Q3, "x");
  CHECK(ok3.weight(TPath({"a", "x", "y", "c"}, net3)) == Rat(1, 2));
  CHECK(ok3.weight(TPath({"b", "y", "x", "d"}, net3)) == Rat(1, 2));
  CHECK(check_capacity(net3, ok3).ok);
}

TEST_CASE("switch: unequal weights split the heavier path") {
  Multigraph g;
  for (auto t : {"a", "b", "c", "d"}) g.add_edge(t, "x");
  Network net(g, {"a", "b", "c", "d"}, {});
  Multiflow f;
  TPath P({"a", "x", "b"}, net), Q({"c", "x", "d"}, net);
  f.add(P, Rat(3, 4));
  f.add(Q, Rat(1, 4));
  Multiflow out = switch_paths(net, f, P, Q, "x");
  CHECK(out.weight(P) == Rat(1, 2));  // residue of the heavier path
  CHECK(out.weight(Q) == Rat(0));
  CHECK(out.weight(TPath({"a", "x", "c"}, net)) == Rat(1, 4));
  CHECK(out.weight(TPath({"b", "x", "d"}, net)) == Rat(1, 4));
  CHECK(out.size() == f.size());
}

TEST_CASE("switch invariants on random flows") {
  int switches_done = 0;
  for (std::uint64_t seed = 1; seed <= 400 && switches_done < 12; ++seed) {
    GenParams params;
    params.nodes = 5 + (int)(seed % 4);
    params.terminals = 2 + (int)(seed % 3);
    Instance inst = random_k_network(seed * 13, params);
    auto paths = enumerate_t_paths(inst.net, false, 4000);
    if (paths.size() < 2) continue;
    Rng rng(seed);
    Multiflow f;
    for (const auto& p : paths)
      if (rng.below(3) == 0) f.add(p, Rat(1, (long long)(1 + rng.below(3))));
    if (f.entries().size() < 2) continue;
    // scale into feasibility
    Rat scale(1);
    std::map<NodePair, Rat> load;
    for (const auto& [p, w] : f.entries())
      for (size_t i = 0; i + 1 < p.nodes().size(); ++i)
        load[make_pair_norm(p.nodes()[i], p.nodes()[i + 1])] += w;
    for (const auto& [pr, l] : load) {
      Rat cap(inst.net.graph().multiplicity(pr.first, pr.second));
      if (cap / l < scale) scale = cap / l;
    }
    Multiflow g;
    for (const auto& [p, w] : f.entries()) g.add(p, w * scale);
    REQUIRE(check_capacity(inst.net, g).ok);

    std::vector<TPath> entries;
    for (const auto& [p, w] : g.entries()) entries.push_back(p);
    for (size_t i = 0; i < entries.size() && switches_done < 12; ++i)
      for (size_t j = i + 1; j < entries.size(); ++j)
        for (const auto& x : inst.net.inner_nodes()) {
          if (!entries[i].is_interior(x) || !entries[j].is_interior(x)) continue;
          try {
            Multiflow out = switch_paths(inst.net, g, entries[i], entries[j], x);
            ++switches_done;
            CHECK(out.size() == g.size());
            CHECK(check_capacity(inst.net, out).ok);
            // per-terminal end weight is preserved
            for (const auto& t : inst.net.terminals()) {
              Rat before, after;
              for (const auto& [p, w] : g.entries())
                before +=
                    w * Rat((p.nodes().front() == t) + (p.nodes().back() == t));
              for (const auto& [p, w] : out.entries())
                after +=
                    w * Rat((p.nodes().front() == t) + (p.nodes().back() == t));
              CHECK(before == after);
            }
            // f[u,v] changes only on the four involved end-pairs
            auto [p1, p2] = entries[i].ends();
            auto [q1, q2] = entries[j].ends();
            std::set<NodePair> touched{entries[i].ends(), entries[j].ends(),
                                       make_pair_norm(p1, q1),
                                       make_pair_norm(p2, q2)};
            for (const auto& u : inst.net.terminals())
              for (const auto& v : inst.net.terminals()) {
                if (u >= v) continue;
                if (touched.count(make_pair_norm(u, v))) continue;
                CHECK(g.value_between(u, v) == out.value_between(u, v));
              }
          } catch (const Error& e) {
            bool expected = e.code() == errc::switch_creates_closed_walk ||
                            e.code() == errc::switch_creates_non_simple_walk;
            CHECK(expected);
          }
        }
  }
  CHECK(switches_done >= 12);
}

TEST_CASE("three_halves on the pattern star") {
  Instance inst = testutil::pattern_star();
  REQUIRE(validate_k_network(inst.net, inst.clutter).is_k_network());
  Multiflow f;
  TPath P = path_of(inst, {"p1", "x", "p2"});
  TPath Q = path_of(inst, {"q1", "x", "q2"});
  f.add(P, Rat(1, 2));
  f.add(Q, Rat(1, 2));
  auto before = objective(f, inst.net, inst.clutter);
  CHECK(before.theta == Rat(3, 4));
  CHECK(before.f_S == Rat(1, 2));

  Multiflow out = three_halves(inst.net, f, P, Q, "x", inst.clutter);
  auto after = objective(out, inst.net, inst.clutter);
  CHECK(after.theta == Rat(3, 4));
  CHECK(after.f_S == Rat(3, 4));
  CHECK(after.size == Rat(3, 4));
  CHECK(out.entries().size() == 3);
  for (const auto& [p, w] : out.entries()) CHECK(w == Rat(1, 4));
  CHECK(check_capacity(inst.net, out).ok);

  // eps = 0 is a no-op
  CHECK(three_halves(inst.net, f, P, Q, "x", inst.clutter, Rat(0)) == f);
}

TEST_CASE("three_halves pattern mismatch is detected") {
  // same star graph, but a clutter making (q1,q2) weak
  Multigraph g;
  std::set<NodeId> terms{"p1", "p2", "q1", "q2"};
  for (const auto& t : terms) g.add_edge(t, "x");
  std::set<NodePair> demands{{"p2", "q1"}, {"p2", "q2"}};
  Network net(g, terms, demands);
  Clutter k = anticliques(terms, demands);
  Multiflow f;
  TPath P({"p1", "x", "p2"}, net), Q({"q1", "x", "q2"}, net);
  f.add(P, Rat(1, 2));
  f.add(Q, Rat(1, 2));
  try {
    three_halves(net, f, P, Q, "x", k);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::class_pattern_mismatch);
  }

  // no common inner node
  Instance c4 = testutil::c4();
  Multiflow f2;
  TPath P2 = path_of(c4, {"s1", "s2", "t1"});
  TPath Q2 = path_of(c4, {"s2", "t1", "t2"});
  f2.add(P2, Rat(1, 4));
  f2.add(Q2, Rat(1, 4));
  try {
    three_halves(c4.net, f2, P2, Q2, "s2", c4.clutter);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::no_common_inner_node);
  }
}

TEST_CASE("three_halves with the epsilon parameter") {
  Instance inst = testutil::pattern_star();
  Multiflow f;
  TPath P = path_of(inst, {"p1", "x", "p2"});
  TPath Q = path_of(inst, {"q1", "x", "q2"});
  f.add(P, Rat(1));
  f.add(Q, Rat(1, 2));
  // unequal weights need an explicit eps
  CHECK_THROWS_AS(three_halves(inst.net, f, P, Q, "x", inst.clutter), Error);
  Rat eps(1, 2);
  Multiflow out = three_halves(inst.net, f, P, Q, "x", inst.clutter, eps);
  auto before = objective(f, inst.net, inst.clutter);
  auto after = objective(out, inst.net, inst.clutter);
  CHECK(after.theta == before.theta);
  CHECK(after.f_S == before.f_S + eps / Rat(2));
  CHECK(after.size == before.size - eps / Rat(2));
  CHECK(check_capacity(inst.net, out).ok);
  CHECK(out.weight(P) == Rat(1, 2));  // alpha - eps
  CHECK(out.weight(Q) == Rat(1, 4));  // beta - eps/2
}

TEST_CASE("augmenting sequence: one switch locks A") {
  Instance inst = cross_star();
  Multiflow f;
  TPath P = path_of(inst, {"a1", "x", "a2"});
  TPath Q = path_of(inst, {"b1", "x", "b2"});
  f.add(P, Rat(1));
  f.add(Q, Rat(1));

  std::set<NodeId> A{"a1", "a2"};
  CHECK_FALSE(locks(inst.net, f, A));
  auto seq = find_augmenting_sequence(inst.net, f, A);
  REQUIRE(seq.has_value());
  CHECK(seq->paths.size() == 2);
  CHECK(seq->links == std::vector<NodeId>{"x"});
  CHECK(seq->paths[0] == P);
  CHECK(seq->paths[1] == Q);

  // the switch locks A, after which no sequence exists
  Multiflow g = switch_paths(inst.net, f, P, Q, "x");
  CHECK(locks(inst.net, g, A));
  CHECK_FALSE(find_augmenting_sequence(inst.net, g, A).has_value());

  // non-maximum flows are rejected
  Multiflow empty;
  CHECK_THROWS_AS(find_augmenting_sequence(inst.net, empty, A), Error);
}

TEST_CASE("augmenting sequence: lambda(A)=0 means locked and none") {
  Multigraph g;
  g.add_edge("a1", "x");
  g.add_edge("x", "a2");
  g.add_node("c1");
  g.add_node("c2");
  std::set<NodeId> terms{"a1", "a2", "c1", "c2"};
  Network net(g, terms, {});
  Multiflow f;
  f.add(TPath({"a1", "x", "a2"}, net), Rat(1));
  std::set<NodeId> A{"c1", "c2"};
  CHECK(locks(net, f, A));
  CHECK_FALSE(find_augmenting_sequence(net, f, A).has_value());
}

TEST_CASE("split_node") {
  auto sxt = testutil::sxt();
  auto pairings = enumerate_pairings(sxt.net, "x");
  REQUIRE(pairings.size() == 1);  // degree 2: forced
  SplitResult sr = split_node(sxt.net, "x", pairings[0]);
  CHECK(sr.net.graph().multiplicity("s", "t") == 1);
  CHECK_FALSE(sr.net.graph().has_node("x"));
  CHECK(sr.dropped_loops.empty());

  // degree-4 node: exactly 3 pairings
  Instance star = testutil::pattern_star();
  CHECK(enumerate_pairings(star.net, "x").size() == 3);

  // terminal and odd-degree errors
  CHECK_THROWS_AS(enumerate_pairings(sxt.net, "s"), Error);
  Multigraph g;
  g.add_edge("a", "x");
  g.add_edge("b", "x", 2);
  Network odd(g, {"a", "b"}, {});
  CHECK_THROWS_AS(enumerate_pairings(odd, "x"), Error);

  // malformed pairing
  SlotPairing bad;
  bad.pairs.push_back({{"s", 0}, {"s", 0}});
  CHECK_THROWS_AS(split_node(sxt.net, "x", bad), Error);
}

TEST_CASE("split_node drops same-neighbor pairs as loops") {
  Multigraph g;
  g.add_edge("a", "x", 2);
  g.add_edge("b", "x", 2);
  Network net(g, {"a", "b"}, {});
  SlotPairing loopy;
  loopy.pairs.push_back({{"a", 0}, {"a", 1}});
  loopy.pairs.push_back({{"b", 0}, {"b", 1}});
  SplitResult sr = split_node(net, "x", loopy);
  CHECK(sr.dropped_loops.size() == 2);
  CHECK(sr.net.graph().multiplicity("a", "b") == 0);
}

TEST_CASE("admissible_splits") {
  Instance star = testutil::pattern_star();

  // empty flow: all three pairings preserve everything
  Multiflow empty;
  auto opts = admissible_splits(star.net, empty, "x");
  REQUIRE(opts.size() == 3);
  for (const auto& o : opts) CHECK(o.destroyed_weight == Rat(0));

  // two paths on disjoint slot pairs: exactly one pairing preserves both
  Multiflow f;
  f.add(testutil::path_of(star, {"p1", "x", "p2"}), Rat(1));
  f.add(testutil::path_of(star, {"q1", "x", "q2"}), Rat(1));
  opts = admissible_splits(star.net, f, "x");
  int zero_count = 0;
  for (const auto& o : opts)
    if (o.destroyed_weight == Rat(0)) ++zero_count;
  CHECK(zero_count == 1);

  // conflicting transits: best pairing destroys 1/2
  Multiflow g;
  g.add(testutil::path_of(star, {"p1", "x", "p2"}), Rat(1, 2));
  g.add(testutil::path_of(star, {"p1", "x", "q1"}), Rat(1, 2));
  opts = admissible_splits(star.net, g, "x");
  Rat best(99);
  for (const auto& o : opts) best = std::min(best, o.destroyed_weight);
  CHECK(best == Rat(1, 2));
}

TEST_CASE("an f-split preserves the paths of f") {
  Instance star = testutil::pattern_star();
  Multiflow f;
  f.add(testutil::path_of(star, {"p1", "x", "p2"}), Rat(1));
  f.add(testutil::path_of(star, {"q1", "x", "q2"}), Rat(1));
  auto opts = admissible_splits(star.net, f, "x");
  for (const auto& o : opts) {
    if (o.destroyed_weight != Rat(0)) continue;
    SplitResult sr = split_node(star.net, "x", o.pairing);
    CHECK(sr.net.graph().multiplicity("p1", "p2") == 1);
    CHECK(sr.net.graph().multiplicity("q1", "q2") == 1);
    Multiflow routed;
    routed.add(TPath({"p1", "p2"}, sr.net), Rat(1));
    routed.add(TPath({"q1", "q2"}, sr.net), Rat(1));
    CHECK(check_capacity(sr.net, routed).ok);
    CHECK(objective(routed, sr.net, star.clutter).theta ==
          objective(f, star.net, star.clutter).theta);
  }
}
