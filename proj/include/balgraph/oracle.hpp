#pragma once

#include "balgraph/graph.hpp"

namespace balgraph {

/// Which quantifier set the reference checker uses for the basic inequality.
/// CoreOnly mirrors the main semantics (forced tails/bridges, inequality on
/// core subcurves); Literal quantifies over every connected proper subcurve
/// not contained in a tail or bridge, overlaps included.
enum class OracleReading { CoreOnly, Literal };

/// Brute-force decomposition computed from scratch (subset enumeration, no
/// code shared with the classification module).
struct OracleContext {
  const MarkedDualGraph* graph = nullptr;
  long long genus = 0;
  bool quasistable = false;
  std::vector<Mask> tails;                       // maximal genus-0 trees with k=1
  std::vector<int> tail_anchor;                  // outside endpoint of the attaching edge
  std::vector<Mask> bridges;                     // maximal genus-0 trees with k=2
  std::vector<std::pair<int, int>> bridge_anchors;
  Mask exceptional = 0;
  Mask tail_union = 0, bridge_union = 0, core = 0;

  /// One record per connected proper subcurve, precomputed so repeated
  /// CoreOnly checks stay cheap.
  struct SubcurveRecord {
    enum class Kind { Tail, Bridge, Core, Skip };
    Mask mask = 0;
    Kind kind = Kind::Skip;
    long long k = 0, w = 0;
    long long t = 0;                 // tails anchored on the subcurve
    std::vector<int> twice_bridges;  // bridges with both anchors inside
  };
  std::vector<SubcurveRecord> subcurves;
};

OracleContext make_oracle_context(const MarkedDualGraph& g);

/// Reference balanced test.  Requires quasistable, genus >= 3.
bool naive_is_balanced(const OracleContext& ctx, const Multidegree& mdeg, OracleReading reading);
bool naive_is_balanced(const MarkedDualGraph& g, const Multidegree& mdeg, OracleReading reading);

/// Smallest box radius guaranteed to contain every balanced multidegree of
/// total degree d (max per-vertex forced value / singleton bound, plus 1).
long long default_box_radius(const OracleContext& ctx, long long d);

/// Every integer vector with entries in [-radius, radius] summing to d that
/// passes the CoreOnly reference test, sorted lexicographically.
std::vector<Multidegree> brute_enumerate(const OracleContext& ctx, long long d,
                                         long long radius);
std::vector<Multidegree> brute_enumerate(const MarkedDualGraph& g, long long d,
                                         long long radius);

struct CorpusParams {
  int maxVertices = 7;
  int maxEdges = 9;
  int minGenusPerVertex = 0;
  int maxGenusPerVertex = 3;
  int maxLegs = 4;
  int degreeBound = 10;
  unsigned long long seed = 0;
};

/// Deterministic random quasistable graph of total genus >= 3 for the given
/// seed.  Throws std::runtime_error when rejection sampling exhausts its
/// retry budget.
MarkedDualGraph random_quasistable(const CorpusParams& params);

}  // namespace balgraph
