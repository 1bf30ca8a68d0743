#pragma once

#include "balgraph/graph.hpp"

namespace balgraph {

/// Verdict of a per-subcurve degree criterion, with the first failing
/// subcurve when it does not hold.  These are sufficient conditions: a false
/// report means "not established by this criterion", never a disproof.
struct CriterionReport {
  bool holds = false;
  struct Witness {
    Mask subcurve = 0;
    long long degree = 0;
    long long threshold = 0;
  };
  std::optional<Witness> witness;
};

/// Multidegree of omega^a(sum of the selected markings): vertex v gets
/// a*(2*genus(v) - 2 + k_v) plus its number of selected legs (loops count
/// twice in k_v).
Multidegree omega_twist_multidegree(const MarkedDualGraph& g, long long a,
                                    const std::set<int>& leg_subset);

/// deg_Z >= 2 g_Z - 1 on every connected subcurve (full graph included)
/// guarantees H^1 = 0.
CriterionReport h1_vanishing(const MarkedDualGraph& g, const Multidegree& mdeg);

/// deg_Z >= 2 g_Z on every connected subcurve guarantees no base points.
CriterionReport base_point_free_criterion(const MarkedDualGraph& g, const Multidegree& mdeg);

/// If deg_Z >= 2g - 2 (total genus) on every connected subcurve, h^0 is
/// exactly d - g + 1; otherwise nothing is concluded.
std::optional<long long> h0_if_criterion(const MarkedDualGraph& g, const Multidegree& mdeg);

/// deg_Z >= 2g (total genus) on every connected subcurve makes
/// L tensor omega(p_1 + ... + p_n) normally generated; the second component is
/// that bundle's multidegree.  Requires a semistable graph of genus >= 2.
std::pair<CriterionReport, Multidegree> normal_generation_hypothesis(const MarkedDualGraph& g,
                                                                     const Multidegree& mdeg);

/// Global generation hypothesis for M^m with M = omega(p_1 + ... + p_n)
/// (or the markings minus the last with drop_last): deg_Z(M^m) >= 2 g_Z on
/// every connected subcurve.  Requires quasistable, 2g-2+n > 0, m >= 2.
CriterionReport dualizing_power_report(const MarkedDualGraph& g, long long m, bool drop_last);

/// Global generation hypothesis for M = L(p_1+...+p_{n-1}) tensor
/// (omega(p_1+...+p_{n-1}))^{-k}, k <= 1, evaluated at the given multidegree:
/// deg_Z(M) >= 2 g_Z on every connected subcurve.  Requires n > 0.
CriterionReport balanced_large_d_report(const MarkedDualGraph& g, const Multidegree& mdeg,
                                        long long k);

}  // namespace balgraph
