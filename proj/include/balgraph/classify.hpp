#pragma once

#include "balgraph/graph.hpp"

namespace balgraph {

/// Maximal rational tail: a pendant genus-0 tree attached to the rest of the
/// graph by a single edge at `anchor` (a vertex outside the tail).
struct RationalTail {
  Mask mask = 0;
  int anchor = -1;
  int attach_edge = -1;
};

/// Maximal rational bridge: a genus-0 tree meeting the rest of the graph in
/// two points, decomposed as a chain of vertices (each possibly carrying
/// rational tails of its own) between the two attaching edges.
struct RationalBridge {
  std::vector<int> chain;             // chain vertices in order, anchor_a side first
  std::vector<Mask> chain_tails;      // tails hanging from each chain vertex
  int anchor_a = -1, anchor_b = -1;   // vertices outside the bridge (may coincide)
  int attach_edge_a = -1, attach_edge_b = -1;
  Mask mask = 0;                      // chain plus attached tails
  int exceptional_pos = -1;           // position in `chain` of an exceptional vertex
};

struct Classification {
  std::vector<RationalTail> tails;    // maximal tails anchored on core vertices
  std::vector<RationalBridge> bridges;
  Mask core = 0;                      // vertices in no tail and no bridge
  Mask tail_vertices = 0;             // union of all tail vertices, incl. tails in bridges
  Mask bridge_vertices = 0;           // union of bridge masks
  Mask exceptional = 0;
  Mask destabilizing = 0;
};

/// Tail/bridge/core decomposition.  Requires a valid graph whose non-rational
/// part is non-empty (total genus >= 1); throws std::domain_error otherwise.
Classification classify(const MarkedDualGraph& g);

struct StabilityStatus {
  bool semistable = false;
  bool stable = false;
  bool quasistable = false;
};

StabilityStatus stability_status(const MarkedDualGraph& g);

/// Every non-empty connected subset of the core that is a proper subcurve of
/// the graph, in increasing mask order.
std::vector<Mask> connected_core_subcurves(const MarkedDualGraph& g, const Classification& cls);

}  // namespace balgraph
