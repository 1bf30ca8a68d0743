#include "balgraph/graph.hpp"

#include <algorithm>
#include <numeric>

namespace balgraph {

MarkedDualGraph::MarkedDualGraph(std::vector<VertexData> vertices,
                                 const std::vector<std::pair<std::string, std::string>>& edges) {
  if (vertices.empty()) throw std::invalid_argument("graph needs at least one vertex");
  if (vertices.size() > 64) throw std::invalid_argument("at most 64 vertices supported");
  std::sort(vertices.begin(), vertices.end(),
            [](const VertexData& a, const VertexData& b) { return a.id < b.id; });
  for (size_t i = 0; i + 1 < vertices.size(); ++i)
    if (vertices[i].id == vertices[i + 1].id)
      throw std::invalid_argument("duplicate vertex id: " + vertices[i].id);
  verts_ = std::move(vertices);
  for (int i = 0; i < num_vertices(); ++i) index_[verts_[i].id] = i;

  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index_.find(a), ib = index_.find(b);
    if (ia == index_.end() || ib == index_.end())
      throw std::invalid_argument("edge endpoint not a vertex: " + (ia == index_.end() ? a : b));
    Edge e{ia->second, ib->second};
    if (e.u > e.v) std::swap(e.u, e.v);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });

  endpoints_.assign(num_vertices(), 0);
  loop_at_.assign(num_vertices(), false);
  for (const Edge& e : edges_) {
    endpoints_[e.u]++;
    endpoints_[e.v]++;
    if (e.u == e.v) loop_at_[e.u] = true;
  }
  n_ = 0;
  for (const VertexData& v : verts_) n_ += static_cast<int>(v.legs.size());
}

int MarkedDualGraph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

int MarkedDualGraph::vertex_with_leg(int label) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (verts_[i].legs.count(label)) return i;
  return -1;
}

ValidationResult validate(const MarkedDualGraph& g) {
  ValidationResult r;
  for (const VertexData& v : g.vertices())
    if (v.genus < 0) r.violations.push_back("negative genus on vertex " + v.id);

  std::map<int, int> leg_count;
  for (const VertexData& v : g.vertices())
    for (int l : v.legs) leg_count[l]++;
  int n = g.num_markings();
  for (const auto& [label, count] : leg_count) {
    if (count > 1)
      r.violations.push_back("duplicate leg label " + std::to_string(label));
    if (label < 1 || label > n)
      r.violations.push_back("leg label " + std::to_string(label) +
                             " outside 1.." + std::to_string(n));
  }
  for (int l = 1; l <= n; ++l)
    if (!leg_count.count(l)) r.violations.push_back("missing leg label " + std::to_string(l));

  if (!induced_connected(g, g.full_mask())) r.violations.push_back("disconnected");
  return r;
}

long long total_genus(const MarkedDualGraph& g) {
  long long s = 0;
  for (const VertexData& v : g.vertices()) s += v.genus;
  return s + g.num_edges() - g.num_vertices() + 1;
}

bool induced_connected(const MarkedDualGraph& g, Mask z) {
  if (z == 0) return false;
  int start = __builtin_ctzll(z);
  Mask seen = bit(start);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Edge& e : g.edges()) {
      Mask eu = bit(e.u), ev = bit(e.v);
      if (!(eu & z) || !(ev & z)) continue;
      if ((seen & eu) && !(seen & ev)) seen |= ev, grew = true;
      else if ((seen & ev) && !(seen & eu)) seen |= eu, grew = true;
    }
  }
  return seen == z;
}

SubcurveInvariants subcurve_invariants(const MarkedDualGraph& g, Mask z) {
  if (z == 0) throw std::domain_error("empty subcurve");
  if (z == g.full_mask()) throw std::domain_error("subcurve must be proper");

  SubcurveInvariants inv;
  long long internal = 0;
  for (const Edge& e : g.edges()) {
    bool iu = (z >> e.u) & 1, iv = (z >> e.v) & 1;
    if (iu && iv) ++internal;
    else if (iu || iv) ++inv.boundary;
  }
  long long genus_sum = 0;
  for (int i = 0; i < g.num_vertices(); ++i)
    if ((z >> i) & 1) genus_sum += g.vertex(i).genus;
  inv.genus = genus_sum + internal - popcount(z) + 1;
  inv.omega_degree = 2 * inv.genus - 2 + inv.boundary;
  inv.connected = induced_connected(g, z);
  return inv;
}

std::vector<Mask> connected_subcurves(const MarkedDualGraph& g, bool include_full) {
  std::vector<Mask> out;
  Mask full = g.full_mask();
  for (Mask z = 1; z <= full; ++z) {
    if (!include_full && z == full) continue;
    if (induced_connected(g, z)) out.push_back(z);
  }
  return out;
}

std::string fresh_vertex_id(const MarkedDualGraph& g, const std::string& base) {
  if (g.index_of(base) < 0) return base;
  for (int k = 1;; ++k) {
    std::string cand = base + "_" + std::to_string(k);
    if (g.index_of(cand) < 0) return cand;
  }
}

BlowUpResult blow_up_edges(const MarkedDualGraph& g, const std::vector<int>& edge_indices) {
  std::vector<VertexData> verts = g.vertices();
  std::vector<std::pair<std::string, std::string>> edges;
  std::set<int> blown(edge_indices.begin(), edge_indices.end());
  for (int e : blown)
    if (e < 0 || e >= g.num_edges()) throw std::invalid_argument("edge index out of range");

  std::set<std::string> used;
  for (const VertexData& v : verts) used.insert(v.id);

  std::vector<std::string> new_ids;
  for (int e = 0; e < g.num_edges(); ++e) {
    const std::string& a = g.vertex(g.edge(e).u).id;
    const std::string& b = g.vertex(g.edge(e).v).id;
    if (!blown.count(e)) {
      edges.emplace_back(a, b);
      continue;
    }
    std::string id = "q" + std::to_string(e);
    for (int k = 1; used.count(id); ++k) id = "q" + std::to_string(e) + "_" + std::to_string(k);
    used.insert(id);
    new_ids.push_back(id);
    verts.push_back(VertexData{id, 0, {}});
    edges.emplace_back(a, id);
    edges.emplace_back(id, b);
  }

  BlowUpResult res{MarkedDualGraph(std::move(verts), edges), {}, std::move(new_ids)};
  for (const VertexData& v : g.vertices()) res.vertex_map[v.id] = v.id;
  return res;
}

long long total_degree(const Multidegree& m) {
  return std::accumulate(m.begin(), m.end(), 0LL);
}

}  // namespace balgraph
