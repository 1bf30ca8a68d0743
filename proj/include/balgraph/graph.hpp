#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace balgraph {

/// Vertex subset of a graph as a bit mask over vertex indices.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline Mask bit(int i) { return Mask(1) << i; }

struct VertexData {
  std::string id;
  int genus = 0;
  std::set<int> legs;  // marking labels carried by this component
};

/// Edge between vertex indices, normalized so u <= v.  u == v is a loop.
struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Dual graph of an n-pointed nodal curve: one vertex per irreducible
/// component (weighted by geometric genus), one edge per node, one leg per
/// marked point.  Vertices are kept sorted by id and edges sorted by
/// endpoints, so vertex/edge indices are deterministic for a given input.
class MarkedDualGraph {
 public:
  MarkedDualGraph(std::vector<VertexData> vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges);

  int num_vertices() const { return static_cast<int>(verts_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const VertexData& vertex(int i) const { return verts_[i]; }
  const std::vector<VertexData>& vertices() const { return verts_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }

  /// Index of the vertex with the given id, or -1.
  int index_of(const std::string& id) const;

  /// Number of markings (total leg count; labels are validated separately).
  int num_markings() const { return n_; }

  /// Edge endpoints incident to vertex i; a loop contributes 2.
  int endpoints_at(int i) const { return endpoints_[i]; }

  bool has_loop_at(int i) const { return loop_at_[i]; }

  Mask full_mask() const { return num_vertices() == 64 ? ~Mask(0) : bit(num_vertices()) - 1; }

  /// Vertex carrying marking `label`, or -1.
  int vertex_with_leg(int label) const;

 private:
  std::vector<VertexData> verts_;
  std::vector<Edge> edges_;
  std::vector<int> endpoints_;
  std::vector<bool> loop_at_;
  std::map<std::string, int> index_;
  int n_ = 0;
};

struct ValidationResult {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Structural checks: connectivity, leg labels forming 1..n with no
/// duplicates, non-negative genera.  All problems are reported, none thrown.
ValidationResult validate(const MarkedDualGraph& g);

/// Arithmetic genus:  sum of vertex genera + |E| - |V| + 1.
long long total_genus(const MarkedDualGraph& g);

struct SubcurveInvariants {
  long long genus = 0;         // g_Z (meaningful when connected)
  long long boundary = 0;      // k_Z: edges with exactly one endpoint in Z
  long long omega_degree = 0;  // w_Z = 2 g_Z - 2 + k_Z
  bool connected = false;
};

/// Invariants of a proper non-empty subcurve.  Throws std::domain_error on
/// the empty set or the full vertex set (k_Z is undefined there).
SubcurveInvariants subcurve_invariants(const MarkedDualGraph& g, Mask z);

/// True when the subgraph induced on `z` is connected (empty set counts as
/// not connected).
bool induced_connected(const MarkedDualGraph& g, Mask z);

/// All connected subcurves of the graph in increasing mask order.  The full
/// vertex set is included only when `include_full` is set.
std::vector<Mask> connected_subcurves(const MarkedDualGraph& g, bool include_full);

struct BlowUpResult {
  MarkedDualGraph graph;
  std::map<std::string, std::string> vertex_map;  // old id -> new id
  std::vector<std::string> new_ids;               // one per blown-up edge
};

/// Replaces each edge in `edge_indices` by a genus-0 legless vertex joined to
/// the original endpoints.  Total genus and leg assignment are preserved.
BlowUpResult blow_up_edges(const MarkedDualGraph& g, const std::vector<int>& edge_indices);

/// Smallest id of the form base, base_1, base_2, ... unused in `g`.
std::string fresh_vertex_id(const MarkedDualGraph& g, const std::string& base);

/// Per-vertex integer degrees, aligned with the graph's vertex order.
using Multidegree = std::vector<long long>;

long long total_degree(const Multidegree& m);

}  // namespace balgraph
