#include "balgraph/balance.hpp"

#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"

using namespace balgraph;

TEST_CASE("degree bounds on the fixtures") {
  MarkedDualGraph g2 = fixtures::g2();
  Classification c2 = classify(g2);
  DegreeBounds b = degree_bounds(g2, c2, bit(g2.index_of("A")), 0, 0, 0);
  CHECK(b.lower == Rational(-1));
  CHECK(b.upper == Rational(1));

  MarkedDualGraph g3 = fixtures::g3();
  Classification c3 = classify(g3);
  DegreeBounds ba = degree_bounds(g3, c3, bit(g3.index_of("A")), 1, 0, 0);
  CHECK(ba.lower == Rational(-1, 2));
  CHECK(ba.upper == Rational(3, 2));
  CHECK(ba.lower.ceil() == 0);
  CHECK(ba.upper.floor() == 1);

  Mask ab = bit(g3.index_of("A")) | bit(g3.index_of("B"));
  DegreeBounds bb = degree_bounds(g3, c3, ab, 1, 0, 0);
  CHECK(bb.lower == Rational(0));
  CHECK(bb.upper == Rational(2));
}

TEST_CASE("forced tail and bridge degrees") {
  MarkedDualGraph g4 = fixtures::g4();
  ForcedDegrees f4 = forced_tail_bridge_degrees(g4, classify(g4));
  REQUIRE(f4.tail_degree.count(g4.index_of("E")));
  CHECK(f4.tail_degree.at(g4.index_of("E")) == -1);

  MarkedDualGraph g3 = fixtures::g3();
  ForcedDegrees f3 = forced_tail_bridge_degrees(g3, classify(g3));
  REQUIRE(f3.bridges.size() == 1);
  CHECK(f3.bridges[0].base == std::vector<long long>{0});
  CHECK(f3.bridges[0].forced_plus == 0);  // exceptional vertex takes the +1
}

TEST_CASE("balanced test") {
  MarkedDualGraph g2 = fixtures::g2();
  CHECK(is_balanced(g2, {0, 0}).verdict);

  BalanceReport bad = is_balanced(g2, {2, -2});
  REQUIRE_FALSE(bad.verdict);
  CHECK(bad.first_violation->kind == ViolationKind::CoreInequality);
  CHECK(bad.first_violation->subcurve == bit(g2.index_of("A")));
  CHECK(bad.first_violation->actual == 2);

  MarkedDualGraph g3 = fixtures::g3();
  Multidegree good(3, 0);
  good[g3.index_of("E")] = 1;
  CHECK(is_balanced(g3, good).verdict);

  Multidegree off(3, 0);  // A=1, E=1, B=-1
  off[g3.index_of("A")] = 1;
  off[g3.index_of("E")] = 1;
  off[g3.index_of("B")] = -1;
  BalanceReport rep = is_balanced(g3, off);
  REQUIRE_FALSE(rep.verdict);
  CHECK(rep.first_violation->subcurve == bit(g3.index_of("B")));
}

TEST_CASE("balanced test preconditions") {
  MarkedDualGraph g2 = fixtures::g2();
  CHECK_THROWS_AS(is_balanced(g2, {0}), std::invalid_argument);

  MarkedDualGraph low({{"A", 1, {1}}}, {});  // genus 1
  CHECK_THROWS_AS(is_balanced(low, {0}), std::domain_error);

  MarkedDualGraph notq({{"A", 3, {}}, {"T", 0, {1}}}, {{"A", "T"}});
  CHECK_THROWS_AS(is_balanced(notq, {0, 0}), std::domain_error);
}

TEST_CASE("enumeration") {
  MarkedDualGraph g2 = fixtures::g2();
  CHECK(enumerate_balanced(g2, 0) ==
        std::vector<Multidegree>{{-1, 1}, {0, 0}, {1, -1}});

  MarkedDualGraph g3 = fixtures::g3();
  Multidegree only(3, 0);
  only[g3.index_of("E")] = 1;
  CHECK(enumerate_balanced(g3, 1) == std::vector<Multidegree>{only});

  MarkedDualGraph g4 = fixtures::g4();
  for (long long d : {-3LL, 0LL, 5LL}) {
    auto sols = enumerate_balanced(g4, d);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0][g4.index_of("E")] == -1);
    CHECK(sols[0][g4.index_of("v0")] == d + 1);
  }

  // Single-vertex graphs admit exactly one multidegree per total.
  CHECK(enumerate_balanced(fixtures::one_vertex(), 7) ==
        std::vector<Multidegree>{{7}});
}

TEST_CASE("enumeration is sound and tails are pinned") {
  MarkedDualGraph g3 = fixtures::g3();
  MarkedDualGraph g4 = fixtures::g4();
  for (long long d = -4; d <= 4; ++d) {
    for (const Multidegree& m : enumerate_balanced(g3, d)) {
      CHECK(is_balanced(g3, m).verdict);
      CHECK(total_degree(m) == d);
    }
    for (const Multidegree& m : enumerate_balanced(g4, d))
      CHECK(m[g4.index_of("E")] == -1);
  }
}

TEST_CASE("basic inequality for unpointed graphs") {
  MarkedDualGraph g2 = fixtures::g2();
  CHECK(is_gieseker_balanced(g2, {0, 0}));
  CHECK_FALSE(is_gieseker_balanced(g2, {2, -2}));

  MarkedDualGraph g3 = fixtures::g3();
  Multidegree m(3, 0);
  m[g3.index_of("E")] = 1;
  CHECK(is_gieseker_balanced(g3, m));
  m[g3.index_of("E")] = 0;
  m[g3.index_of("A")] = 1;
  CHECK_FALSE(is_gieseker_balanced(g3, m));  // exceptional degree must be 1

  MarkedDualGraph pointed = fixtures::g4();
  CHECK_THROWS_AS(is_gieseker_balanced(pointed, {0, 0}), std::domain_error);
}

TEST_CASE("omega twist") {
  MarkedDualGraph g2 = fixtures::g2();
  BalanceContext ctx2 = make_balance_context(g2);
  CHECK(twist_by_omega(ctx2, {-1, 1}, 1) == Multidegree{1, 3});
  CHECK(twist_by_omega(ctx2, {-1, 1}, 0) == Multidegree{-1, 1});

  MarkedDualGraph g3 = fixtures::g3();
  BalanceContext ctx3 = make_balance_context(g3);
  Multidegree m(3, 0);
  m[g3.index_of("E")] = 1;
  Multidegree t = twist_by_omega(ctx3, m, 1);
  CHECK(t[g3.index_of("A")] == 2);
  CHECK(t[g3.index_of("B")] == 2);
  CHECK(t[g3.index_of("E")] == 1);
  CHECK(total_degree(t) == 1 + (2 * total_genus(g3) - 2));
}

TEST_CASE("twist is a bijection between enumerations") {
  MarkedDualGraph g2 = fixtures::g2();
  BalanceContext ctx = make_balance_context(g2);
  for (long long m : {-1LL, 1LL, 2LL}) {
    auto from = enumerate_balanced(g2, 0);
    auto to = enumerate_balanced(g2, m * (2 * total_genus(g2) - 2));
    CHECK(from.size() == to.size());
    for (const Multidegree& x : from) {
      Multidegree y = twist_by_omega(ctx, x, m);
      CHECK(std::find(to.begin(), to.end(), y) != to.end());
      CHECK(twist_by_omega(ctx, y, -m) == x);
    }
  }
}

TEST_CASE("numeric stack criteria") {
  CHECK(dm_condition(1, 3));
  CHECK_FALSE(dm_condition(4, 3));
  CHECK_FALSE(dm_condition(2, 3));
  CHECK_THROWS_AS(dm_condition(0, 2), std::domain_error);

  CHECK(stack_dimension(3, 0) == 9);
  CHECK(stack_dimension(3, 1) == 10);
  CHECK(stack_dimension(5, 2) == 19);
  CHECK_THROWS_AS(stack_dimension(2, 0), std::domain_error);
}
