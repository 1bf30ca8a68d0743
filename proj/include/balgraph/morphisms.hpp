#pragma once

#include "balgraph/balance.hpp"
#include "balgraph/classify.hpp"
#include "balgraph/graph.hpp"

namespace balgraph {

/// Combinatorial position of an extra section: a generic smooth point of a
/// component, a node (edge), or an existing marking.
struct PointLocation {
  enum class Kind { OnVertex, AtNode, AtMarking };
  Kind kind = Kind::OnVertex;
  std::string vertex;  // OnVertex: component id
  int edge = -1;       // AtNode: edge index
  int marking = -1;    // AtMarking: leg label

  static PointLocation on_vertex(std::string id) {
    PointLocation p;
    p.kind = Kind::OnVertex;
    p.vertex = std::move(id);
    return p;
  }
  static PointLocation at_node(int e) {
    PointLocation p;
    p.kind = Kind::AtNode;
    p.edge = e;
    return p;
  }
  static PointLocation at_marking(int label) {
    PointLocation p;
    p.kind = Kind::AtMarking;
    p.marking = label;
    return p;
  }
};

struct ContractionOutcome {
  MarkedDualGraph graph;
  Multidegree mdeg;
  PointLocation delta;
  std::map<std::string, std::string> vertex_map;  // surviving old id -> new id
  std::optional<std::string> contracted;
};

/// Removes the last marking (label n+1), collapsing its component when the
/// twisted bundle has degree 0 on it.  Requires a quasistable graph with at
/// least one marking and a balanced multidegree.
ContractionOutcome contract_last_marking(const MarkedDualGraph& g, const Multidegree& mdeg);

struct StabilizationOutcome {
  MarkedDualGraph graph;
  Multidegree mdeg;
  std::map<std::string, std::string> vertex_map;
};

/// Adds a marking n+1 at `delta`, blowing up a node or an existing marking
/// into a new rational component when needed.  Total degree is preserved and
/// the output is again quasistable and balanced.
StabilizationOutcome stabilize(const MarkedDualGraph& g, const Multidegree& mdeg,
                               const PointLocation& delta);

struct StableModelOutcome {
  MarkedDualGraph graph;
  std::map<std::string, std::string> vertex_map;  // surviving old id -> new id
};

/// Contracts every exceptional component (iterating) to reach the stable
/// model.  Requires a quasistable graph with 2g-2+n > 0.
StableModelOutcome stable_model(const MarkedDualGraph& g);

/// Total degree {0,1} per maximal bridge, with the chain position of the +1
/// when the total is 1.  Bridges holding an exceptional vertex must be
/// assigned 1 with the +1 at that vertex.
struct BridgeAssignment {
  std::vector<int> total;     // aligned with Classification::bridges
  std::vector<int> plus_pos;  // chain index of the +1; ignored when total 0
};

/// The all-zero assignment, overridden to 1 on bridges with an exceptional
/// vertex.
BridgeAssignment default_bridge_assignment(const Classification& cls);

/// All valid assignments (free bridges take 0 or 1 at every chain position).
std::vector<BridgeAssignment> all_bridge_assignments(const Classification& cls);

struct StripOutcome {
  MarkedDualGraph graph;
  std::map<std::string, std::string> vertex_map;  // old id -> new id (survivors)
};

/// Removes all maximal tails, contracts zero-assigned bridges to nodes,
/// replaces one-assigned bridges by a single exceptional vertex, and drops
/// all legs.  The result is legless quasistable of the same total genus.
StripOutcome strip_to_unpointed(const MarkedDualGraph& g, const Classification& cls,
                                const BridgeAssignment& assignment);

/// Inverse of the strip on multidegrees: core vertex degrees gain one per
/// attached maximal tail, tails and bridges take their forced pattern under
/// `assignment`.  Requires mdeg0 to satisfy the basic inequality on the
/// stripped graph.
Multidegree lift_multidegree(const MarkedDualGraph& g, const Classification& cls,
                             const BridgeAssignment& assignment, const Multidegree& mdeg0);

struct FiberEntry {
  std::vector<int> blown_edges;  // sorted edge indices of the stable graph
  MarkedDualGraph graph;
  std::vector<Multidegree> multidegrees;
};

/// Census of the quasistable models over a stable graph: every edge subset is
/// blown up, kept when quasistable, and paired with its balanced
/// multidegrees of total degree d.  Sorted by subset size, then by edge list.
std::vector<FiberEntry> forgetful_fiber(const MarkedDualGraph& stable_graph, long long d);

}  // namespace balgraph
