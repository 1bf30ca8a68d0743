#include "balgraph/cohomology.hpp"

#include <doctest.h>

#include "fixtures.hpp"

using namespace balgraph;

TEST_CASE("dualizing sheaf multidegrees") {
  CHECK(omega_twist_multidegree(fixtures::g2(), 1, {}) == Multidegree{2, 2});

  MarkedDualGraph g3 = fixtures::g3();
  Multidegree w3 = omega_twist_multidegree(g3, 1, {});
  CHECK(w3[g3.index_of("A")] == 2);
  CHECK(w3[g3.index_of("B")] == 2);
  CHECK(w3[g3.index_of("E")] == 0);

  MarkedDualGraph g4 = fixtures::g4();
  Multidegree w4 = omega_twist_multidegree(g4, 3, {1, 2});
  CHECK(w4[g4.index_of("v0")] == 15);  // 3*(2*3 - 2 + 1)
  CHECK(w4[g4.index_of("E")] == -1);   // 3*(-1) + 2 selected legs
  CHECK(total_degree(w4) == 3 * (2 * total_genus(g4) - 2) + 2);

  // A loop counts twice in the local dualizing degree.
  MarkedDualGraph loop({{"A", 1, {}}}, {{"A", "A"}});
  CHECK(omega_twist_multidegree(loop, 1, {}) == Multidegree{2});
}

TEST_CASE("first cohomology vanishing threshold") {
  MarkedDualGraph g2 = fixtures::g2();
  CriterionReport low = h1_vanishing(g2, {2, 2});
  REQUIRE_FALSE(low.holds);
  CHECK(low.witness->subcurve == g2.full_mask());
  CHECK(low.witness->degree == 4);
  CHECK(low.witness->threshold == 5);
  CHECK(h1_vanishing(g2, {3, 3}).holds);

  MarkedDualGraph one = fixtures::one_vertex();
  CHECK(h1_vanishing(one, {5}).holds);
  CHECK_FALSE(h1_vanishing(one, {4}).holds);
}

TEST_CASE("base point freeness threshold") {
  MarkedDualGraph one = fixtures::one_vertex();
  CHECK(base_point_free_criterion(one, {6}).holds);
  CHECK_FALSE(base_point_free_criterion(one, {5}).holds);
  CHECK(base_point_free_criterion(fixtures::g2(), {3, 3}).holds);
}

TEST_CASE("base point freeness implies h1 vanishing") {
  MarkedDualGraph g3 = fixtures::g3();
  for (long long a = -1; a <= 3; ++a)
    for (long long b = -1; b <= 3; ++b) {
      Multidegree m(3, 2);
      m[g3.index_of("A")] = a;
      m[g3.index_of("B")] = b;
      if (base_point_free_criterion(g3, m).holds) CHECK(h1_vanishing(g3, m).holds);
    }
}

TEST_CASE("h0 count under the uniform threshold") {
  MarkedDualGraph one = fixtures::one_vertex();
  CHECK(h0_if_criterion(one, {5}) == 3);
  CHECK_FALSE(h0_if_criterion(one, {3}).has_value());
  CHECK(h0_if_criterion(fixtures::g2(), {4, 4}) == 6);
}

TEST_CASE("normal generation hypothesis") {
  MarkedDualGraph one = fixtures::one_vertex();
  auto [rep, shifted] = normal_generation_hypothesis(one, {6});
  CHECK(rep.holds);
  CHECK(shifted == Multidegree{10});
  CHECK_FALSE(normal_generation_hypothesis(one, {5}).first.holds);

  auto [rep2, shifted2] = normal_generation_hypothesis(fixtures::g2(), {6, 6});
  CHECK(rep2.holds);
  CHECK(shifted2 == Multidegree{8, 8});

  MarkedDualGraph bad({{"A", 3, {}}, {"T", 0, {}}}, {{"A", "T"}});
  CHECK_THROWS_AS(normal_generation_hypothesis(bad, {0, 0}), std::domain_error);
}

TEST_CASE("powers of the pointed dualizing sheaf are globally generated") {
  for (long long m : {2LL, 3LL, 4LL}) {
    CHECK(dualizing_power_report(fixtures::g2(), m, false).holds);
    CHECK(dualizing_power_report(fixtures::g3(), m, false).holds);
    CHECK(dualizing_power_report(fixtures::g4(), m, false).holds);
    CHECK(dualizing_power_report(fixtures::g4(), m, true).holds);
  }
  CHECK_THROWS_AS(dualizing_power_report(fixtures::g2(), 1, false), std::domain_error);
}

TEST_CASE("large-d hypothesis at a concrete degree") {
  MarkedDualGraph g4 = fixtures::g4();
  Multidegree big(2, 0);
  big[g4.index_of("v0")] = 21;
  big[g4.index_of("E")] = -1;
  CHECK(balanced_large_d_report(g4, big, 0).holds);

  Multidegree small(2, 0);
  small[g4.index_of("v0")] = 1;
  small[g4.index_of("E")] = -1;
  CHECK_FALSE(balanced_large_d_report(g4, small, 0).holds);

  MarkedDualGraph one = fixtures::one_vertex(2);
  CHECK_FALSE(balanced_large_d_report(one, {7}, 1).holds);
  CHECK_THROWS_AS(balanced_large_d_report(fixtures::g2(), {0, 0}, 0), std::domain_error);
}

TEST_CASE("criteria are monotone in the multidegree") {
  MarkedDualGraph g3 = fixtures::g3();
  Multidegree base(3, 3);
  for (int v = 0; v < 3; ++v) {
    Multidegree more = base;
    more[v] += 2;
    if (h1_vanishing(g3, base).holds) CHECK(h1_vanishing(g3, more).holds);
    if (base_point_free_criterion(g3, base).holds)
      CHECK(base_point_free_criterion(g3, more).holds);
    if (h0_if_criterion(g3, base))
      CHECK(h0_if_criterion(g3, more) == total_degree(more) - total_genus(g3) + 1);
  }
}
