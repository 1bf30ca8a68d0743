#include "balgraph/cohomology.hpp"

#include "balgraph/classify.hpp"

namespace balgraph {

namespace {

long long genus_of(const MarkedDualGraph& g, Mask z) {
  if (z == g.full_mask()) return total_genus(g);
  return subcurve_invariants(g, z).genus;
}

long long mask_degree(const Multidegree& mdeg, Mask z) {
  long long s = 0;
  while (z) {
    s += mdeg[__builtin_ctzll(z)];
    z &= z - 1;
  }
  return s;
}

/// Scan deg_Z >= threshold(g_Z) over all connected subcurves incl. the full
/// graph; threshold is 2 g_Z + shift.
CriterionReport scan(const MarkedDualGraph& g, const Multidegree& mdeg, long long shift) {
  CriterionReport rep;
  for (Mask z : connected_subcurves(g, true)) {
    long long thr = 2 * genus_of(g, z) + shift;
    long long deg = mask_degree(mdeg, z);
    if (deg < thr) {
      rep.witness = CriterionReport::Witness{z, deg, thr};
      return rep;
    }
  }
  rep.holds = true;
  return rep;
}

}  // namespace

Multidegree omega_twist_multidegree(const MarkedDualGraph& g, long long a,
                                    const std::set<int>& leg_subset) {
  Multidegree out(g.num_vertices(), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    long long legs = 0;
    for (int l : g.vertex(v).legs)
      if (leg_subset.count(l)) ++legs;
    out[v] = a * (2 * g.vertex(v).genus - 2 + g.endpoints_at(v)) + legs;
  }
  return out;
}

CriterionReport h1_vanishing(const MarkedDualGraph& g, const Multidegree& mdeg) {
  if (static_cast<int>(mdeg.size()) != g.num_vertices())
    throw std::invalid_argument("multidegree size does not match graph");
  return scan(g, mdeg, -1);
}

CriterionReport base_point_free_criterion(const MarkedDualGraph& g, const Multidegree& mdeg) {
  if (static_cast<int>(mdeg.size()) != g.num_vertices())
    throw std::invalid_argument("multidegree size does not match graph");
  return scan(g, mdeg, 0);
}

std::optional<long long> h0_if_criterion(const MarkedDualGraph& g, const Multidegree& mdeg) {
  if (static_cast<int>(mdeg.size()) != g.num_vertices())
    throw std::invalid_argument("multidegree size does not match graph");
  long long gen = total_genus(g);
  long long thr = 2 * gen - 2;  // total genus, uniform over subcurves
  for (Mask z : connected_subcurves(g, true))
    if (mask_degree(mdeg, z) < thr) return std::nullopt;
  return total_degree(mdeg) - gen + 1;
}

std::pair<CriterionReport, Multidegree> normal_generation_hypothesis(const MarkedDualGraph& g,
                                                                    const Multidegree& mdeg) {
  if (static_cast<int>(mdeg.size()) != g.num_vertices())
    throw std::invalid_argument("multidegree size does not match graph");
  long long gen = total_genus(g);
  if (gen < 2 || !stability_status(g).semistable)
    throw std::domain_error("normal generation needs a semistable graph of genus >= 2");

  CriterionReport rep;
  long long thr = 2 * gen;  // total genus, uniform over subcurves
  rep.holds = true;
  for (Mask z : connected_subcurves(g, true)) {
    long long deg = mask_degree(mdeg, z);
    if (deg < thr) {
      rep.holds = false;
      rep.witness = CriterionReport::Witness{z, deg, thr};
      break;
    }
  }

  std::set<int> all_legs;
  for (int l = 1; l <= g.num_markings(); ++l) all_legs.insert(l);
  Multidegree shift = omega_twist_multidegree(g, 1, all_legs);
  Multidegree shifted = mdeg;
  for (int v = 0; v < g.num_vertices(); ++v) shifted[v] += shift[v];
  return {rep, shifted};
}

CriterionReport dualizing_power_report(const MarkedDualGraph& g, long long m, bool drop_last) {
  if (m < 2) throw std::domain_error("dualizing power report needs m >= 2");
  int n = g.num_markings();
  if (!stability_status(g).quasistable || 2 * total_genus(g) - 2 + n <= 0)
    throw std::domain_error("dualizing power report needs quasistable with 2g-2+n > 0");

  std::set<int> legs;
  for (int l = 1; l <= n - (drop_last ? 1 : 0); ++l) legs.insert(l);
  Multidegree base = omega_twist_multidegree(g, 1, legs);
  Multidegree scaled(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) scaled[v] = m * base[v];
  return scan(g, scaled, 0);
}

CriterionReport balanced_large_d_report(const MarkedDualGraph& g, const Multidegree& mdeg,
                                        long long k) {
  if (static_cast<int>(mdeg.size()) != g.num_vertices())
    throw std::invalid_argument("multidegree size does not match graph");
  int n = g.num_markings();
  if (n == 0) throw std::domain_error("large-d report needs at least one marking");
  if (k > 1) throw std::domain_error("large-d report needs k <= 1");
  if (!stability_status(g).quasistable)
    throw std::domain_error("large-d report needs a quasistable graph");

  std::set<int> legs;
  for (int l = 1; l < n; ++l) legs.insert(l);
  Multidegree omega = omega_twist_multidegree(g, 1, legs);
  Multidegree m(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    long long marked = 0;
    for (int l : g.vertex(v).legs)
      if (legs.count(l)) ++marked;
    m[v] = mdeg[v] + marked - k * omega[v];
  }
  return scan(g, m, 0);
}

}  // namespace balgraph
