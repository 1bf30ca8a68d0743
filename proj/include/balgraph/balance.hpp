#pragma once

#include "balgraph/classify.hpp"
#include "balgraph/graph.hpp"
#include "balgraph/rational.hpp"

#include <optional>

namespace balgraph {

/// Lower/upper bound pair for the degree of a balanced line bundle on a core
/// subcurve; denominators divide 2(2g-2).
struct DegreeBounds {
  Rational lower;  // m_Z
  Rational upper;  // M_Z
};

/// m_Z/M_Z for a connected core subcurve, given the number of tails attached
/// to Z and the number of degree-zero bridges meeting Z twice.
/// Requires total genus >= 3.
DegreeBounds degree_bounds(const MarkedDualGraph& g, const Classification& cls, Mask z,
                           long long d, int zero_bridges_on_z, int tails_on_z);

enum class ViolationKind {
  ExceptionalDegree,
  TailDegree,
  TailVertexForced,
  BridgePattern,
  CoreInequality,
};

struct BalanceViolation {
  ViolationKind kind;
  Mask subcurve = 0;
  Rational lower;
  Rational upper;
  long long actual = 0;
};

struct BalanceReport {
  bool verdict = false;
  std::optional<BalanceViolation> first_violation;
};

/// Per-bridge degree pattern: each chain vertex i carries base[i] = k_i - 2,
/// and at most one of them carries base[i] + 1.  `forced_plus` is the chain
/// position of an exceptional vertex (which must take the +1), or -1 when the
/// placement is free (including the all-zero pattern).
struct BridgeChoice {
  std::vector<long long> base;
  int forced_plus = -1;
};

struct ForcedDegrees {
  std::map<int, long long> tail_degree;   // vertex index -> k_v - 2, tails incl. those in bridges
  std::vector<BridgeChoice> bridges;      // aligned with Classification::bridges
};

/// Degrees pinned on tails and the choice structure on bridges.
/// Throws std::domain_error when the graph is not quasistable.
ForcedDegrees forced_tail_bridge_degrees(const MarkedDualGraph& g, const Classification& cls);

/// Precomputed per-graph data so balance checks in tight loops stay cheap.
struct BalanceContext {
  const MarkedDualGraph* graph = nullptr;
  Classification cls;
  ForcedDegrees forced;
  std::vector<Mask> core_subcurves;
  long long genus = 0;
  bool quasistable = false;

  struct CoreSubcurveData {
    Mask mask;
    long long w, k;
    int tails;                       // maximal tails whose attaching edge meets Z
    std::vector<int> twice_bridges;  // bridges with both attaching edges meeting Z
  };
  std::vector<CoreSubcurveData> core_data;
};

BalanceContext make_balance_context(const MarkedDualGraph& g);

/// Balanced test per the tail/bridge forcing plus the core inequality.
/// Requires quasistable input of genus >= 3 (std::domain_error otherwise).
BalanceReport is_balanced(const BalanceContext& ctx, const Multidegree& mdeg);
BalanceReport is_balanced(const MarkedDualGraph& g, const Multidegree& mdeg);

/// All balanced multidegrees of total degree d, sorted lexicographically in
/// vertex-id order.
std::vector<Multidegree> enumerate_balanced(const BalanceContext& ctx, long long d);
std::vector<Multidegree> enumerate_balanced(const MarkedDualGraph& g, long long d);

/// Gieseker's basic inequality over all connected proper subcurves, for
/// unpointed graphs.  Throws std::domain_error when n > 0.
bool is_gieseker_balanced(const MarkedDualGraph& g, const Multidegree& mdeg);
bool is_gieseker_balanced(const MarkedDualGraph& g, const std::vector<Mask>& proper_subcurves,
                          const Multidegree& mdeg);

/// Twist by the m-th power of the pulled-back dualizing sheaf of the stripped
/// curve: core vertex v gains m*(w_v - t_v), tails and bridges are unchanged.
/// The total degree moves by m*(2g-2).
Multidegree twist_by_omega(const BalanceContext& ctx, const Multidegree& mdeg, long long m);

/// gcd(d - g + 1, 2g - 2) == 1: the rigidified stack is Deligne-Mumford.
bool dm_condition(long long d, long long g);

/// 4g - 3 + n.
long long stack_dimension(long long g, long long n);

}  // namespace balgraph
