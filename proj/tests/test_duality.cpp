#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathpack/duality.hpp"
#include "pathpack/generator.hpp"
#include "testutil.hpp"

using namespace pathpack;

TEST_CASE("expansion enumeration counts (|T|+1)^inner") {
  auto sxt = testutil::sxt();
  auto xs = enumerate_expansions(sxt.net, 1000);
  CHECK(xs.size() == 3);  // x unassigned, x in X_s, x in X_t

  auto c4 = testutil::c4();
  CHECK(enumerate_expansions(c4.net, 1000).size() == 1);  // no inner nodes

  Multigraph g;  // 2 inner, 2 terminals: 9
  g.add_edge("s", "x");
  g.add_edge("x", "y");
  g.add_edge("y", "t");
  Network net(g, {"s", "t"}, std::set<NodePair>{{"s", "t"}});
  CHECK(enumerate_expansions(net, 1000).size() == 9);
  CHECK_THROWS_AS(enumerate_expansions(net, 5), Error);
}

TEST_CASE("compress_expansion") {
  auto sxt = testutil::sxt();
  auto xs = enumerate_expansions(sxt.net, 1000);

  // trivial expansion: network unchanged
  for (const auto& x : xs) {
    if (!x.is_trivial()) continue;
    CHECK(compress_expansion(sxt.net, x) == sxt.net);
  }

  // x in X_s: edge (s,t) of multiplicity 1
  Expansion xsru;
  xsru.blocks["s"] = {"s", "x"};
  xsru.blocks["t"] = {"t"};
  Network gx = compress_expansion(sxt.net, xsru);
  CHECK(gx.graph().multiplicity("s", "t") == 1);
  CHECK_FALSE(gx.graph().has_node("x"));

  // swallowing a degree-2 inner node re-sums multiplicities
  Multigraph g;
  g.add_edge("a", "x");
  g.add_edge("x", "b");
  g.add_edge("a", "b");
  Network net(g, {"a", "b"}, std::set<NodePair>{{"a", "b"}});
  Expansion swallow;
  swallow.blocks["a"] = {"a", "x"};
  swallow.blocks["b"] = {"b"};
  CHECK(compress_expansion(net, swallow).graph().multiplicity("a", "b") == 2);

  // invalid blocks
  Expansion overlap;
  overlap.blocks["s"] = {"s", "x"};
  overlap.blocks["t"] = {"t", "x"};
  CHECK_THROWS_AS(compress_expansion(sxt.net, overlap), Error);
  Expansion foreign;
  foreign.blocks["s"] = {"s", "t"};
  foreign.blocks["t"] = {"t"};
  CHECK_THROWS_AS(compress_expansion(sxt.net, foreign), Error);
}

TEST_CASE("dual_value worked examples") {
  auto sxt = testutil::sxt();
  // K = {{s},{t}}, beta = 0: trivial expansion gives (1+1)/2 = 1 = theta
  REQUIRE(sxt.clutter.members == std::vector<std::set<NodeId>>{{"s"}, {"t"}});
  auto xs = enumerate_expansions(sxt.net, 1000);
  for (const auto& x : xs) CHECK(dual_value(sxt.net, sxt.clutter, x) == Rat(1));

  auto c4 = testutil::c4();
  Expansion trivial;
  for (const auto& t : c4.net.terminals()) trivial.blocks[t] = {t};
  // (1/2)*8 - (1/2)*(1+1+1+1) = 2
  CHECK(dual_value(c4.net, c4.clutter, trivial) == Rat(2));
}

TEST_CASE("verify_maxmin on worked instances") {
  auto sxt = testutil::sxt();
  auto rep = verify_maxmin(sxt.net, sxt.clutter);
  CHECK(rep.primal_theta == Rat(1));
  CHECK(rep.min_dual == Rat(1));
  CHECK(rep.equality);
  CHECK(rep.weak_duality_ok);
  CHECK(rep.expansions_checked == 3);

  auto c4 = testutil::c4();
  auto repc = verify_maxmin(c4.net, c4.clutter);
  CHECK(repc.primal_theta == Rat(2));
  CHECK(repc.equality);
  CHECK(repc.expansions_checked == 1);
  CHECK(repc.best.is_trivial());

  Instance star = testutil::star6();
  auto reps = verify_maxmin(star.net, star.clutter);
  CHECK(reps.primal_theta == Rat(3));
  CHECK(reps.equality);
  CHECK(reps.weak_duality_ok);
}

TEST_CASE("verify_maxmin requires a simple clutter") {
  Multigraph g;
  g.add_edge("a", "b");
  Network net(g, {"a", "b"}, {});  // S empty: K = {{a,b}}, atom {a,b}
  Clutter k = anticliques(net.terminals(), net.demands());
  CHECK_THROWS_AS(verify_maxmin(net, k), Error);
}

TEST_CASE("refinement monotonicity of compressed optima") {
  // X <= Y blockwise implies theta_X <= theta_Y
  Multigraph g;
  g.add_edge("s", "x");
  g.add_edge("x", "y");
  g.add_edge("y", "t");
  Network net(g, {"s", "t"}, std::set<NodePair>{{"s", "t"}});
  Clutter k = anticliques(net.terminals(), net.demands());
  auto xs = enumerate_expansions(net, 1000);
  auto contained = [](const Expansion& a, const Expansion& b) {
    for (const auto& [t, block] : a.blocks) {
      const auto& bb = b.blocks.at(t);
      if (!std::includes(bb.begin(), bb.end(), block.begin(), block.end()))
        return false;
    }
    return true;
  };
  int pairs = 0;
  for (const auto& a : xs)
    for (const auto& b : xs) {
      if (!contained(a, b)) continue;
      ++pairs;
      Rat ta = solve_fractional(compress_expansion(net, a), k, Problem::W, false).value;
      Rat tb = solve_fractional(compress_expansion(net, b), k, Problem::W, false).value;
      CHECK(ta <= tb);
    }
  CHECK(pairs > 9);  // reflexive pairs plus genuine refinements
}

TEST_CASE("maxmin equality and weak duality on random K-networks") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GenParams params;
    params.nodes = 4 + (int)(seed % 3);
    params.terminals = 2 + (int)(seed % 3);
    Instance inst = random_k_network(seed * 313, params);
    CompressedInstance comp = compress_atoms(inst.net, inst.clutter);
    auto rep = verify_maxmin(comp.net, comp.clutter);
    CHECK(rep.equality);
    CHECK(rep.weak_duality_ok);
    // dual values are half-integral on Eulerian instances
    for_each_expansion(comp.net, 100000, [&](const Expansion& x) {
      Rat dv = dual_value(comp.net, comp.clutter, x);
      CHECK((dv * Rat(2)).is_integer());
    });
  }
}

TEST_CASE("dual_solution_properties on worked instances") {
  auto sxt = testutil::sxt();
  Expansion trivial;
  trivial.blocks["s"] = {"s"};
  trivial.blocks["t"] = {"t"};
  Multiflow h;
  h.add(TPath({"s", "x", "t"}, sxt.net), Rat(1));
  auto rep = dual_solution_properties(sxt.net, sxt.clutter, trivial, h);
  CHECK(rep.ok());

  // the claims are about maximum X-flows attaining theta; the lexicographic
  // LP produces one (here: the four unit-weight edge paths, size 4, theta 2)
  auto c4 = testutil::c4();
  Expansion triv4;
  for (const auto& t : c4.net.terminals()) triv4.blocks[t] = {t};
  auto h4 = max_theta_max_size_flow(c4.net, c4.clutter);
  CHECK(h4.value == Rat(2));
  CHECK(h4.size == Rat(4));
  auto rep4 = dual_solution_properties(c4.net, c4.clutter, triv4, h4.flow);
  CHECK(rep4.ok());

  // the theta-optimal four-half-path flow (not maximum) still locks every
  // clutter member, matching the locking claim for anticliques
  Multiflow halves;
  halves.add(TPath({"s1", "s2", "t1"}, c4.net), Rat(1, 2));
  halves.add(TPath({"s1", "t2", "t1"}, c4.net), Rat(1, 2));
  halves.add(TPath({"s2", "s1", "t2"}, c4.net), Rat(1, 2));
  halves.add(TPath({"s2", "t1", "t2"}, c4.net), Rat(1, 2));
  auto reph = dual_solution_properties(c4.net, c4.clutter, triv4, halves);
  CHECK(reph.clutter_locked);

  // a non-optimal flow shows up as unsaturated edges
  Multiflow empty;
  auto repe = dual_solution_properties(c4.net, c4.clutter, triv4, empty);
  CHECK_FALSE(repe.saturated);
  CHECK(repe.unsaturated_edges.size() == 4);
}

TEST_CASE("dual_solution_properties rejects non-minimizing expansions") {
  Instance star = testutil::star6();
  // theta = 3; find an expansion with a larger dual value
  auto xs = enumerate_expansions(star.net, 1000);
  bool found = false;
  for (const auto& x : xs) {
    if (dual_value(star.net, star.clutter, x) == Rat(3)) continue;
    found = true;
    Multiflow h;
    CHECK_THROWS_AS(dual_solution_properties(star.net, star.clutter, x, h), Error);
    break;
  }
  CHECK(found);
}
