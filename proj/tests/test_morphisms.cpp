#include "balgraph/morphisms.hpp"

#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"

using namespace balgraph;

namespace {

bool same_graph(const MarkedDualGraph& a, const MarkedDualGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  for (int i = 0; i < a.num_vertices(); ++i) {
    if (a.vertex(i).id != b.vertex(i).id) return false;
    if (a.vertex(i).genus != b.vertex(i).genus) return false;
    if (a.vertex(i).legs != b.vertex(i).legs) return false;
  }
  return a.edges() == b.edges();
}

}  // namespace

TEST_CASE("contracting a marked tail") {
  MarkedDualGraph g4 = fixtures::g4();
  Multidegree m(2, 0);
  m[g4.index_of("E")] = -1;
  m[g4.index_of("v0")] = 1;  // total 0

  ContractionOutcome out = contract_last_marking(g4, m);
  CHECK(out.graph.num_vertices() == 1);
  CHECK(out.graph.vertex(0).id == "v0");
  CHECK(out.graph.vertex(0).genus == 3);
  CHECK(out.graph.vertex(0).legs == std::set<int>{1});
  CHECK(out.mdeg == Multidegree{0});
  CHECK(out.delta.kind == PointLocation::Kind::AtMarking);
  CHECK(out.delta.marking == 1);
  CHECK(out.contracted == "E");
  CHECK(total_degree(out.mdeg) == total_degree(m));
}

TEST_CASE("contracting a degree-zero bridge vertex") {
  MarkedDualGraph g({{"A", 1, {}}, {"E", 0, {1}}, {"B", 1, {}}},
                    {{"A", "E"}, {"E", "B"}, {"A", "B"}});
  Multidegree m(3, 0);
  m[g.index_of("B")] = 1;  // total 1, balanced

  ContractionOutcome out = contract_last_marking(g, m);
  CHECK(same_graph(out.graph, fixtures::g2()));
  CHECK(out.mdeg == Multidegree{0, 1});
  CHECK(out.delta.kind == PointLocation::Kind::AtNode);
  Edge e = out.graph.edge(out.delta.edge);
  CHECK(e.u == out.graph.index_of("A"));
  CHECK(e.v == out.graph.index_of("B"));
  CHECK(out.contracted == "E");
}

TEST_CASE("contraction is a no-op on positive genus") {
  MarkedDualGraph g = fixtures::one_vertex(2);
  ContractionOutcome out = contract_last_marking(g, {5});
  CHECK(out.graph.vertex(0).legs == std::set<int>{1});
  CHECK(out.mdeg == Multidegree{5});
  CHECK(out.delta.kind == PointLocation::Kind::OnVertex);
  CHECK(out.delta.vertex == "A");
  CHECK_FALSE(out.contracted.has_value());
}

TEST_CASE("contraction preconditions") {
  CHECK_THROWS_AS(contract_last_marking(fixtures::one_vertex(0), {5}), std::domain_error);
  CHECK_THROWS_AS(contract_last_marking(fixtures::g4(), {0, 0}), std::domain_error);
}

TEST_CASE("stabilizing at a node blows the edge up") {
  MarkedDualGraph g2 = fixtures::g2();
  StabilizationOutcome out = stabilize(g2, {0, 0}, PointLocation::at_node(0));
  CHECK(out.graph.num_vertices() == 3);
  CHECK(out.graph.num_markings() == 1);
  int q = -1;
  for (int i = 0; i < out.graph.num_vertices(); ++i)
    if (out.graph.vertex(i).legs.count(1)) q = i;
  REQUIRE(q >= 0);
  CHECK(out.graph.vertex(q).genus == 0);
  CHECK(out.graph.endpoints_at(q) == 2);
  CHECK(out.mdeg[q] == 0);
  CHECK(total_degree(out.mdeg) == 0);
  CHECK(stability_status(out.graph).quasistable);
  CHECK(is_balanced(out.graph, out.mdeg).verdict);
}

TEST_CASE("stabilizing at a marking moves it to a new tail") {
  MarkedDualGraph g = fixtures::one_vertex(1);
  StabilizationOutcome out = stabilize(g, {2}, PointLocation::at_marking(1));
  CHECK(out.graph.num_vertices() == 2);
  int t = -1;
  for (int i = 0; i < out.graph.num_vertices(); ++i)
    if (out.graph.vertex(i).genus == 0) t = i;
  REQUIRE(t >= 0);
  CHECK(out.graph.vertex(t).legs == std::set<int>{1, 2});
  CHECK(out.mdeg[t] == -1);
  CHECK(out.mdeg[out.graph.index_of("A")] == 3);
  CHECK(is_balanced(out.graph, out.mdeg).verdict);
}

TEST_CASE("stabilizing on a vertex only adds the leg") {
  MarkedDualGraph g2 = fixtures::g2();
  StabilizationOutcome out = stabilize(g2, {0, 0}, PointLocation::on_vertex("B"));
  CHECK(out.graph.vertex(out.graph.index_of("B")).legs == std::set<int>{1});
  CHECK(out.mdeg == Multidegree{0, 0});
  CHECK_THROWS_AS(stabilize(g2, {0, 0}, PointLocation::on_vertex("Z")), std::domain_error);
  CHECK_THROWS_AS(stabilize(g2, {0, 0}, PointLocation::at_node(9)), std::domain_error);
}

TEST_CASE("round trips between stabilization and contraction") {
  MarkedDualGraph g2 = fixtures::g2();
  std::vector<PointLocation> deltas = {PointLocation::on_vertex("A"),
                                       PointLocation::at_node(0),
                                       PointLocation::at_node(1)};
  for (const Multidegree& m : enumerate_balanced(g2, 0))
    for (const PointLocation& delta : deltas) {
      StabilizationOutcome up = stabilize(g2, m, delta);
      ContractionOutcome down = contract_last_marking(up.graph, up.mdeg);
      CHECK(same_graph(down.graph, g2));
      CHECK(down.mdeg == m);
      CHECK(down.delta.kind == delta.kind);
      if (delta.kind == PointLocation::Kind::AtNode)
        CHECK(down.graph.edge(down.delta.edge) == g2.edge(delta.edge));
    }

  // The marking round trip, through the g4 shape.
  MarkedDualGraph g1 = fixtures::one_vertex(1);
  StabilizationOutcome up = stabilize(g1, {4}, PointLocation::at_marking(1));
  ContractionOutcome down = contract_last_marking(up.graph, up.mdeg);
  CHECK(same_graph(down.graph, g1));
  CHECK(down.mdeg == Multidegree{4});
  CHECK(down.delta.kind == PointLocation::Kind::AtMarking);
  CHECK(down.delta.marking == 1);
}

TEST_CASE("stable model") {
  StableModelOutcome g3s = stable_model(fixtures::g3());
  CHECK(same_graph(g3s.graph, fixtures::g2()));
  CHECK(g3s.vertex_map.count("A"));
  CHECK_FALSE(g3s.vertex_map.count("E"));

  StableModelOutcome g2s = stable_model(fixtures::g2());
  CHECK(same_graph(g2s.graph, fixtures::g2()));

  BlowUpResult both = blow_up_edges(fixtures::g2(), {0, 1});
  CHECK(same_graph(stable_model(both.graph).graph, fixtures::g2()));

  // Contracting an exceptional vertex whose edges share both endpoints gives
  // a loop.
  MarkedDualGraph loopy({{"A", 2, {}}, {"E", 0, {}}}, {{"A", "E"}, {"A", "E"}});
  StableModelOutcome ls = stable_model(loopy);
  CHECK(ls.graph.num_vertices() == 1);
  CHECK(ls.graph.num_edges() == 1);
  CHECK(ls.graph.has_loop_at(0));
  CHECK(total_genus(ls.graph) == 3);
}

TEST_CASE("stripping to an unpointed graph") {
  MarkedDualGraph g4 = fixtures::g4();
  Classification c4 = classify(g4);
  StripOutcome s4 = strip_to_unpointed(g4, c4, default_bridge_assignment(c4));
  CHECK(s4.graph.num_vertices() == 1);
  CHECK(s4.graph.vertex(0).id == "v0");
  CHECK(s4.graph.num_markings() == 0);
  CHECK(total_genus(s4.graph) == 3);

  MarkedDualGraph g3 = fixtures::g3();
  Classification c3 = classify(g3);
  StripOutcome s3 = strip_to_unpointed(g3, c3, default_bridge_assignment(c3));
  CHECK(same_graph(s3.graph, g3));  // exceptional bridge kept, already legless
  CHECK(s3.vertex_map.at("E") == "E");

  // A zero bridge contracts to a single node.
  MarkedDualGraph br({{"A", 2, {}}, {"B", 2, {}}, {"C", 0, {1}}},
                     {{"A", "C"}, {"C", "B"}});
  Classification cb = classify(br);
  REQUIRE(cb.bridges.size() == 1);
  StripOutcome sb = strip_to_unpointed(br, cb, BridgeAssignment{{0}, {0}});
  CHECK(sb.graph.num_vertices() == 2);
  CHECK(sb.graph.num_edges() == 1);
  CHECK(total_genus(sb.graph) == total_genus(br));

  // And a one bridge becomes a single exceptional vertex.  C carries a leg,
  // so it is not exceptional and the replacement vertex gets a fresh id.
  StripOutcome s1 = strip_to_unpointed(br, cb, BridgeAssignment{{1}, {0}});
  CHECK(s1.graph.num_vertices() == 3);
  CHECK(s1.graph.num_edges() == 2);
  std::string x = s1.vertex_map.at("C");
  CHECK(x != "C");
  int xi = s1.graph.index_of(x);
  REQUIRE(xi >= 0);
  CHECK(s1.graph.vertex(xi).genus == 0);
  CHECK(s1.graph.endpoints_at(xi) == 2);
  CHECK(total_genus(s1.graph) == total_genus(br));
}

TEST_CASE("strip rejects inconsistent assignments") {
  MarkedDualGraph g3 = fixtures::g3();
  Classification c3 = classify(g3);
  CHECK_THROWS_AS(strip_to_unpointed(g3, c3, BridgeAssignment{{0}, {0}}), std::domain_error);
  CHECK_THROWS_AS(strip_to_unpointed(g3, c3, BridgeAssignment{{2}, {0}}), std::domain_error);
  CHECK_THROWS_AS(strip_to_unpointed(g3, c3, BridgeAssignment{{}, {}}), std::invalid_argument);
}

TEST_CASE("lifting multidegrees from the stripped graph") {
  MarkedDualGraph g4 = fixtures::g4();
  Classification c4 = classify(g4);
  for (long long d : {-2LL, 0LL, 3LL}) {
    Multidegree lifted = lift_multidegree(g4, c4, default_bridge_assignment(c4), {d});
    CHECK(lifted[g4.index_of("v0")] == d + 1);
    CHECK(lifted[g4.index_of("E")] == -1);
    CHECK(is_balanced(g4, lifted).verdict);
  }

  MarkedDualGraph g3 = fixtures::g3();
  Classification c3 = classify(g3);
  Multidegree m0(3, 0);
  m0[g3.index_of("E")] = 1;
  CHECK(lift_multidegree(g3, c3, default_bridge_assignment(c3), m0) == m0);

  CHECK_THROWS_AS(lift_multidegree(g3, c3, default_bridge_assignment(c3),
                                   Multidegree{2, -2, 1}),
                  std::domain_error);
}

TEST_CASE("fiber census over the two-component fixture") {
  auto census = forgetful_fiber(fixtures::g2(), 1);
  REQUIRE(census.size() == 4);
  CHECK(census[0].blown_edges.empty());
  CHECK(census[0].multidegrees == std::vector<Multidegree>{{0, 1}, {1, 0}});
  CHECK(census[1].blown_edges == std::vector<int>{0});
  CHECK(census[1].multidegrees.size() == 1);
  CHECK(census[2].blown_edges == std::vector<int>{1});
  CHECK(census[2].multidegrees.size() == 1);
  CHECK(census[3].blown_edges == std::vector<int>{0, 1});
  CHECK(census[3].multidegrees.empty());

  for (const FiberEntry& e : census) {
    for (const Multidegree& m : e.multidegrees) {
      CHECK(is_balanced(e.graph, m).verdict);
      CHECK(total_degree(m) == 1);
    }
    CHECK(same_graph(stable_model(e.graph).graph, fixtures::g2()));
  }
}

TEST_CASE("fiber census over a single vertex") {
  auto census = forgetful_fiber(fixtures::one_vertex(), 5);
  REQUIRE(census.size() == 1);
  CHECK(census[0].multidegrees == std::vector<Multidegree>{{5}});
  CHECK_THROWS_AS(forgetful_fiber(fixtures::g3(), 1), std::domain_error);
}

TEST_CASE("all bridge assignments") {
  MarkedDualGraph g3 = fixtures::g3();
  auto all = all_bridge_assignments(classify(g3));
  REQUIRE(all.size() == 1);  // the exceptional vertex pins the assignment
  CHECK(all[0].total == std::vector<int>{1});

  MarkedDualGraph br({{"A", 2, {}}, {"B", 2, {}}, {"C", 0, {1}}},
                     {{"A", "C"}, {"C", "B"}});
  auto free = all_bridge_assignments(classify(br));
  CHECK(free.size() == 2);  // total 0, or total 1 at the single chain slot
}
