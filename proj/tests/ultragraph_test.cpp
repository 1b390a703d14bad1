#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "ultrashift/ultragraph.hpp"

using namespace ultrashift;
using namespace testsupport;

namespace {
const Universe kV = Universe::infinite(1);
const Universe kE = Ultragraph::edge_index_space();
}  // namespace

TEST_CASE("source and range resolution") {
  Ultragraph g3 = example3();
  CHECK(g3.range(1) == IndexSet::excluding(kV, {1, 2}));
  CHECK(g3.range(7) == IndexSet::all(kV));
  CHECK(g3.source(1) == 1);
  CHECK(g3.source(7) == 7);
  CHECK_THROWS_AS(g3.range(0), LookupError);
  CHECK_THROWS_AS(g3.source(0), LookupError);

  Ultragraph g42 = example42();
  CHECK(g42.source(4) == 4);
  CHECK(g42.range(3) == IndexSet::excluding(kV, {1, 2}));

  Ultragraph g53 = example53();
  CHECK(g53.source(0) == 1);
  CHECK(g53.source(1) == 1);
  CHECK(g53.source(2) == 2);
  CHECK(g53.source(9) == 9);
  CHECK(g53.range(0) == IndexSet::excluding(kV, {2}));
}

TEST_CASE("edge sets") {
  CHECK(example3().edge_set() == IndexSet::excluding(kE, {0}));
  CHECK(example53().edge_set() == IndexSet::all(kE));
  CHECK(bouquet().edge_set() == IndexSet::excluding(kE, {0}));
  Ultragraph finite_loop(Universe::finite(1), {{0, 0, IndexSet::of(Universe::finite(1), {0})}},
                         std::nullopt);
  CHECK(finite_loop.edge_set() == IndexSet::of(kE, {0}));
}

TEST_CASE("source preimages") {
  Ultragraph g3 = example3();
  CHECK(g3.source_preimage(IndexSet::of(kV, {2})) == IndexSet::of(kE, {2}));
  CHECK(g3.source_preimage(IndexSet::all(kV)) == g3.edge_set());
  CHECK(g3.source_preimage(g3.range(1)) == IndexSet::excluding(kE, {0, 1, 2}));

  // s^-1(r(e_i))^c = {e_j : j < i} in the climbing-range example.
  Ultragraph g42 = example42();
  IndexSet pre = g42.source_preimage(g42.range(3));
  CHECK(set_difference(g42.edge_set(), pre) == IndexSet::of(kE, {1, 2}));

  // Every loop of the bouquet starts at the unique vertex.
  Ultragraph b = bouquet();
  CHECK(b.source_preimage(IndexSet::of(Universe::finite(1), {0})) == b.edge_set());

  CHECK(g3.outgoing_edges(2) == std::vector<Index>{2});
  CHECK(example53().outgoing_edges(1) == std::vector<Index>{0, 1});
  CHECK_FALSE(b.outgoing_edges(0).has_value());
}

TEST_CASE("preimage distributes over union (brute-force oracle below index 64)") {
  std::mt19937_64 rng(99);
  for (const Ultragraph& g : {example3(), example42(), example53()}) {
    for (int trial = 0; trial < 200; ++trial) {
      IndexSet a = random_set(rng, kV);
      IndexSet b = random_set(rng, kV);
      IndexSet lhs = g.source_preimage(set_union(a, b));
      IndexSet rhs = set_union(g.source_preimage(a), g.source_preimage(b));
      CHECK(lhs == rhs);
      for (Index e : g.edges_up_to(63)) {
        CHECK(lhs.contains(e) == set_union(a, b).contains(g.source(e)));
      }
    }
  }
}

TEST_CASE("relative range-preimage complements match brute force") {
  for (const Ultragraph& g : {example3(), example42(), example53()}) {
    IndexSet edges = g.edge_set();
    for (Index e : g.edges_up_to(12)) {
      IndexSet symbolic = set_difference(edges, g.source_preimage(g.range(e)));
      CHECK_FALSE(symbolic.is_infinite());
      for (Index f : g.edges_up_to(63)) {
        CHECK(symbolic.contains(f) == !g.range(e).contains(g.source(f)));
      }
    }
  }
}

TEST_CASE("hypothesis report on the worked examples") {
  HypothesisReport h3 = example3().hypotheses();
  CHECK(h3.infinite_edges);
  CHECK(h3.range_preimage_complements_finite);
  CHECK(h3.source_fibers_finite_or_cofinite);
  CHECK(h3.no_sinks);
  CHECK(h3.ranges_contain_non_sink);
  CHECK(h3.eligible());

  CHECK(example42().hypotheses().eligible());
  CHECK(example53().hypotheses().eligible());
  CHECK(bouquet().hypotheses().eligible());

  // A single loop without a tail: H1 fails.
  Universe u1 = Universe::finite(1);
  Ultragraph one_loop(u1, {{0, 0, IndexSet::of(u1, {0})}}, std::nullopt);
  CHECK_FALSE(one_loop.hypotheses().infinite_edges);
  CHECK(one_loop.hypotheses().failing().substr(0, 2) == "H1");

  // Constant-vertex tail over an infinite universe: everything else is a sink.
  Ultragraph lonely(kV, {},
                    TailRule{1, TailRule::ConstantVertex{1},
                             TailRule::ConstantRange{IndexSet::all(kV)}});
  CHECK_FALSE(lonely.hypotheses().no_sinks);
  CHECK(lonely.sinks() == IndexSet::excluding(kV, {1}));

  // A range consisting of a single sink: H5 fails.
  Universe u2 = Universe::finite(2);
  Ultragraph to_sink(u2, {{0, 0, IndexSet::of(u2, {1})}}, std::nullopt);
  CHECK_FALSE(to_sink.hypotheses().ranges_contain_non_sink);
}

TEST_CASE("classification") {
  Classification c3 = example3().classify();
  CHECK_FALSE(c3.is_graph);
  CHECK_FALSE(c3.is_bouquet);
  CHECK(c3.sinks == IndexSet::none(kV));
  CHECK(c3.regular_vertices == IndexSet::all(kV));

  Classification cb = bouquet().classify();
  CHECK(cb.is_graph);
  CHECK(cb.is_bouquet);
  CHECK(cb.regular_vertices == IndexSet::none(Universe::finite(1)));

  Classification c53 = example53().classify();
  CHECK(c53.regular_vertices == IndexSet::all(kV));

  // Two vertices, all edges v0 -> v1: a graph but not a bouquet.
  Universe u2 = Universe::finite(2);
  Ultragraph across(u2, {},
                    TailRule{0, TailRule::ConstantVertex{0},
                             TailRule::ConstantRange{IndexSet::of(u2, {1})}});
  CHECK(across.classify().is_graph);
  CHECK_FALSE(across.classify().is_bouquet);
}

TEST_CASE("condition (L)") {
  ConditionL l3 = example3().condition_l(6);
  CHECK(l3.status == ConditionL::Status::Satisfied);
  CHECK(l3.reason == "H1 and H2 hold");

  // Single vertex, single loop: the only loop has no exit.
  Universe u1 = Universe::finite(1);
  Ultragraph one_loop(u1, {{0, 0, IndexSet::of(u1, {0})}}, std::nullopt);
  ConditionL viol = one_loop.condition_l(4);
  CHECK(viol.status == ConditionL::Status::Violated);
  CHECK(viol.witness_loop == std::vector<Index>{0});

  // Loop at v0 plus an edge v0 -> v1 with a return edge: the loop has exits.
  Universe u2 = Universe::finite(2);
  Ultragraph with_exit(u2,
                       {{0, 0, IndexSet::of(u2, {0})},
                        {1, 0, IndexSet::of(u2, {1})},
                        {2, 1, IndexSet::of(u2, {0})}},
                       std::nullopt);
  CHECK(with_exit.condition_l(4).status == ConditionL::Status::Satisfied);

  // Two-step no-exit cycle.
  Ultragraph cycle(u2, {{0, 0, IndexSet::of(u2, {1})}, {1, 1, IndexSet::of(u2, {0})}},
                   std::nullopt);
  ConditionL viol2 = cycle.condition_l(4);
  CHECK(viol2.status == ConditionL::Status::Violated);
  CHECK(viol2.witness_loop.size() == 2);

  // Infinite presentation without the H1+H2 shortcut: the bounded search
  // stays inconclusive.
  Ultragraph climbing(kV, {}, TailRule{1, TailRule::ConstantVertex{1}, TailRule::UpperTail{0}});
  REQUIRE_FALSE(climbing.hypotheses().range_preimage_complements_finite);
  ConditionL open = climbing.condition_l(4);
  CHECK(open.status == ConditionL::Status::Unknown);
  CHECK(open.searched_up_to == 4);
}

TEST_CASE("construction rejects invalid presentations") {
  CHECK_THROWS_AS(Ultragraph(kV, {{1, 1, IndexSet::none(kV)}}, std::nullopt), UsageError);
  CHECK_THROWS_AS(Ultragraph(kV,
                             {{1, 1, IndexSet::all(kV)}, {1, 2, IndexSet::all(kV)}},
                             std::nullopt),
                  UsageError);
  // Tail start at or below an exceptional index.
  CHECK_THROWS_AS(Ultragraph(kV, {{3, 1, IndexSet::all(kV)}},
                             TailRule{2, TailRule::Identity{},
                                      TailRule::ConstantRange{IndexSet::all(kV)}}),
                  UsageError);
  // Identity tails need an infinite vertex universe.
  Universe u2 = Universe::finite(2);
  CHECK_THROWS_AS(Ultragraph(u2, {},
                             TailRule{1, TailRule::Identity{},
                                      TailRule::ConstantRange{IndexSet::of(u2, {0})}}),
                  UsageError);
  // Uppertail needs an infinite vertex universe.
  CHECK_THROWS_AS(Ultragraph(u2, {}, TailRule{1, TailRule::ConstantVertex{0}, TailRule::UpperTail{0}}),
                  UsageError);
  // Identity tail pairing an edge with vertex 0.
  CHECK_THROWS_AS(Ultragraph(kV, {},
                             TailRule{0, TailRule::Identity{},
                                      TailRule::ConstantRange{IndexSet::all(kV)}}),
                  UsageError);
}

TEST_CASE("ranges are nonempty on randomized valid presentations") {
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 100; ++trial) {
    Index extra = 1 + rng() % 4;
    std::vector<ExceptionalEdge> edges;
    for (Index e = 1; e <= extra; ++e) {
      std::vector<Index> excl;
      for (Index k = 1; k < 1 + rng() % 4; ++k) excl.push_back(1 + rng() % 9);
      edges.push_back({e, e, IndexSet::excluding(kV, excl)});
    }
    Ultragraph g(kV, edges,
                 TailRule{extra + 1, TailRule::Identity{},
                          TailRule::ConstantRange{IndexSet::all(kV)}});
    for (Index e : g.edges_up_to(extra + 5)) {
      CHECK_FALSE(g.range(e).is_empty());
    }
  }
}
