#include "balgraph/morphisms.hpp"

#include <algorithm>

namespace balgraph {

namespace {

Multidegree realign(const MarkedDualGraph& from, const Multidegree& mdeg,
                    const MarkedDualGraph& to, long long missing = 0) {
  Multidegree out(to.num_vertices(), missing);
  for (int i = 0; i < to.num_vertices(); ++i) {
    int j = from.index_of(to.vertex(i).id);
    if (j >= 0) out[i] = mdeg[j];
  }
  return out;
}

std::map<std::string, std::string> identity_map(const MarkedDualGraph& g) {
  std::map<std::string, std::string> m;
  for (const VertexData& v : g.vertices()) m[v.id] = v.id;
  return m;
}

}  // namespace

ContractionOutcome contract_last_marking(const MarkedDualGraph& g, const Multidegree& mdeg) {
  int n1 = g.num_markings();
  if (n1 < 1) throw std::domain_error("no marking to contract");
  BalanceContext ctx = make_balance_context(g);
  if (!is_balanced(ctx, mdeg).verdict)
    throw std::domain_error("multidegree is not balanced");

  int v = g.vertex_with_leg(n1);
  std::set<int> other = g.vertex(v).legs;
  other.erase(n1);
  bool trigger = g.vertex(v).genus == 0 &&
                 mdeg[v] + static_cast<long long>(other.size()) == 0;

  if (trigger && !g.has_loop_at(v) && g.endpoints_at(v) == 1 && other.size() == 1) {
    // Tail case: the component collapses onto its neighbor, which inherits
    // the remaining marking and loses one degree.
    int leg = *other.begin();
    int attach = -1;
    for (int e = 0; e < g.num_edges(); ++e)
      if (g.edge(e).u == v || g.edge(e).v == v) attach = e;
    int f = g.edge(attach).u == v ? g.edge(attach).v : g.edge(attach).u;

    std::vector<VertexData> verts;
    for (int i = 0; i < g.num_vertices(); ++i) {
      if (i == v) continue;
      VertexData vd = g.vertex(i);
      if (i == f) vd.legs.insert(leg);
      verts.push_back(vd);
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (int e = 0; e < g.num_edges(); ++e) {
      if (e == attach) continue;
      edges.emplace_back(g.vertex(g.edge(e).u).id, g.vertex(g.edge(e).v).id);
    }
    ContractionOutcome out{MarkedDualGraph(std::move(verts), edges), {},
                           PointLocation::at_marking(leg), {}, g.vertex(v).id};
    out.mdeg = realign(g, mdeg, out.graph);
    out.mdeg[out.graph.index_of(g.vertex(f).id)] -= 1;
    out.vertex_map = identity_map(out.graph);
    return out;
  }

  if (trigger && !g.has_loop_at(v) && g.endpoints_at(v) == 2 && other.empty()) {
    // Bridge case: splice the two edges through the component into one node.
    int e1 = -1, e2 = -1;
    for (int e = 0; e < g.num_edges(); ++e) {
      if (g.edge(e).u != v && g.edge(e).v != v) continue;
      (e1 < 0 ? e1 : e2) = e;
    }
    std::string a = g.vertex(g.edge(e1).u == v ? g.edge(e1).v : g.edge(e1).u).id;
    std::string b = g.vertex(g.edge(e2).u == v ? g.edge(e2).v : g.edge(e2).u).id;

    std::vector<VertexData> verts;
    for (int i = 0; i < g.num_vertices(); ++i)
      if (i != v) verts.push_back(g.vertex(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int e = 0; e < g.num_edges(); ++e) {
      if (e == e1 || e == e2) continue;
      edges.emplace_back(g.vertex(g.edge(e).u).id, g.vertex(g.edge(e).v).id);
    }
    edges.emplace_back(a, b);
    ContractionOutcome out{MarkedDualGraph(std::move(verts), edges), {},
                           PointLocation{}, {}, g.vertex(v).id};
    int ia = out.graph.index_of(a), ib = out.graph.index_of(b);
    if (ia > ib) std::swap(ia, ib);
    for (int e = 0; e < out.graph.num_edges(); ++e)
      if (out.graph.edge(e).u == ia && out.graph.edge(e).v == ib) {
        out.delta = PointLocation::at_node(e);
        break;
      }
    out.mdeg = realign(g, mdeg, out.graph);
    out.vertex_map = identity_map(out.graph);
    return out;
  }

  // Nothing to contract: drop the last leg, treating its position as a
  // generic smooth point of the component.
  std::vector<VertexData> verts = g.vertices();
  verts[v].legs.erase(n1);
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Edge& e : g.edges())
    edges.emplace_back(g.vertex(e.u).id, g.vertex(e.v).id);
  ContractionOutcome out{MarkedDualGraph(std::move(verts), edges), mdeg,
                         PointLocation::on_vertex(g.vertex(v).id), {}, std::nullopt};
  out.vertex_map = identity_map(out.graph);
  return out;
}

StabilizationOutcome stabilize(const MarkedDualGraph& g, const Multidegree& mdeg,
                               const PointLocation& delta) {
  BalanceContext ctx = make_balance_context(g);
  if (!is_balanced(ctx, mdeg).verdict)
    throw std::domain_error("multidegree is not balanced");
  int n = g.num_markings();

  std::vector<VertexData> verts = g.vertices();
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Edge& e : g.edges())
    edges.emplace_back(g.vertex(e.u).id, g.vertex(e.v).id);

  std::string new_id;
  long long new_deg = 0;
  std::string bumped;  // vertex whose degree rises by 1 (marking case)

  switch (delta.kind) {
    case PointLocation::Kind::OnVertex: {
      int v = g.index_of(delta.vertex);
      if (v < 0) throw std::domain_error("unknown vertex: " + delta.vertex);
      verts[v].legs.insert(n + 1);
      break;
    }
    case PointLocation::Kind::AtNode: {
      if (delta.edge < 0 || delta.edge >= g.num_edges())
        throw std::domain_error("edge index out of range");
      const Edge& e = g.edge(delta.edge);
      new_id = fresh_vertex_id(g, "q" + std::to_string(delta.edge));
      verts.push_back(VertexData{new_id, 0, {n + 1}});
      edges[delta.edge] = {g.vertex(e.u).id, new_id};
      edges.emplace_back(new_id, g.vertex(e.v).id);
      new_deg = 0;
      break;
    }
    case PointLocation::Kind::AtMarking: {
      int v = g.vertex_with_leg(delta.marking);
      if (v < 0) throw std::domain_error("unknown marking");
      new_id = fresh_vertex_id(g, "t" + std::to_string(delta.marking));
      verts[v].legs.erase(delta.marking);
      verts.push_back(VertexData{new_id, 0, {delta.marking, n + 1}});
      edges.emplace_back(g.vertex(v).id, new_id);
      new_deg = -1;
      bumped = g.vertex(v).id;
      break;
    }
  }

  StabilizationOutcome out{MarkedDualGraph(std::move(verts), edges), {}, {}};
  out.mdeg = realign(g, mdeg, out.graph);
  if (!new_id.empty()) out.mdeg[out.graph.index_of(new_id)] = new_deg;
  if (!bumped.empty()) out.mdeg[out.graph.index_of(bumped)] += 1;
  out.vertex_map = identity_map(g);
  return out;
}

StableModelOutcome stable_model(const MarkedDualGraph& g) {
  StabilityStatus st = stability_status(g);
  if (!st.quasistable || 2 * total_genus(g) - 2 + g.num_markings() <= 0)
    throw std::domain_error("stable model needs a quasistable graph with 2g-2+n > 0");

  MarkedDualGraph cur = g;
  std::map<std::string, std::string> vmap = identity_map(g);
  while (true) {
    int v = -1;
    for (int i = 0; i < cur.num_vertices(); ++i) {
      if (cur.vertex(i).genus != 0 || cur.has_loop_at(i)) continue;
      if (cur.endpoints_at(i) == 2 && cur.vertex(i).legs.empty()) {
        v = i;
        break;
      }
    }
    if (v < 0) break;

    int e1 = -1, e2 = -1;
    for (int e = 0; e < cur.num_edges(); ++e) {
      if (cur.edge(e).u != v && cur.edge(e).v != v) continue;
      (e1 < 0 ? e1 : e2) = e;
    }
    std::string a = cur.vertex(cur.edge(e1).u == v ? cur.edge(e1).v : cur.edge(e1).u).id;
    std::string b = cur.vertex(cur.edge(e2).u == v ? cur.edge(e2).v : cur.edge(e2).u).id;

    std::vector<VertexData> verts;
    for (int i = 0; i < cur.num_vertices(); ++i)
      if (i != v) verts.push_back(cur.vertex(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int e = 0; e < cur.num_edges(); ++e) {
      if (e == e1 || e == e2) continue;
      edges.emplace_back(cur.vertex(cur.edge(e).u).id, cur.vertex(cur.edge(e).v).id);
    }
    edges.emplace_back(a, b);  // a == b yields a loop
    vmap.erase(cur.vertex(v).id);
    cur = MarkedDualGraph(std::move(verts), edges);
  }
  return StableModelOutcome{std::move(cur), std::move(vmap)};
}

BridgeAssignment default_bridge_assignment(const Classification& cls) {
  BridgeAssignment a;
  for (const RationalBridge& b : cls.bridges) {
    a.total.push_back(b.exceptional_pos >= 0 ? 1 : 0);
    a.plus_pos.push_back(b.exceptional_pos >= 0 ? b.exceptional_pos : 0);
  }
  return a;
}

std::vector<BridgeAssignment> all_bridge_assignments(const Classification& cls) {
  std::vector<BridgeAssignment> out{BridgeAssignment{}};
  for (const RationalBridge& b : cls.bridges) {
    std::vector<std::pair<int, int>> options;  // (total, plus_pos)
    if (b.exceptional_pos >= 0) {
      options.emplace_back(1, b.exceptional_pos);
    } else {
      options.emplace_back(0, 0);
      for (size_t j = 0; j < b.chain.size(); ++j) options.emplace_back(1, static_cast<int>(j));
    }
    std::vector<BridgeAssignment> next;
    for (const BridgeAssignment& base : out)
      for (auto [tot, pos] : options) {
        BridgeAssignment a = base;
        a.total.push_back(tot);
        a.plus_pos.push_back(pos);
        next.push_back(std::move(a));
      }
    out = std::move(next);
  }
  return out;
}

namespace {

void check_assignment(const Classification& cls, const BridgeAssignment& a) {
  if (a.total.size() != cls.bridges.size() || a.plus_pos.size() != cls.bridges.size())
    throw std::invalid_argument("bridge assignment size does not match classification");
  for (size_t i = 0; i < cls.bridges.size(); ++i) {
    const RationalBridge& b = cls.bridges[i];
    if (a.total[i] != 0 && a.total[i] != 1)
      throw std::domain_error("bridge totals must be 0 or 1");
    if (b.exceptional_pos >= 0 &&
        (a.total[i] != 1 || a.plus_pos[i] != b.exceptional_pos))
      throw std::domain_error("bridge with an exceptional vertex must carry its +1 there");
    if (a.total[i] == 1 &&
        (a.plus_pos[i] < 0 || a.plus_pos[i] >= static_cast<int>(b.chain.size())))
      throw std::domain_error("bridge +1 position out of range");
  }
}

}  // namespace

StripOutcome strip_to_unpointed(const MarkedDualGraph& g, const Classification& cls,
                                const BridgeAssignment& assignment) {
  if (!stability_status(g).quasistable)
    throw std::domain_error("strip needs a quasistable graph");
  check_assignment(cls, assignment);

  std::vector<VertexData> verts;
  std::set<std::string> used;
  for (int i = 0; i < g.num_vertices(); ++i)
    if ((cls.core >> i) & 1) {
      verts.push_back(VertexData{g.vertex(i).id, g.vertex(i).genus, {}});
      used.insert(g.vertex(i).id);
    }

  std::vector<std::pair<std::string, std::string>> edges;
  for (const Edge& e : g.edges())
    if (((cls.core >> e.u) & 1) && ((cls.core >> e.v) & 1))
      edges.emplace_back(g.vertex(e.u).id, g.vertex(e.v).id);

  std::map<std::string, std::string> vmap;
  for (const VertexData& v : verts) vmap[v.id] = v.id;

  for (size_t i = 0; i < cls.bridges.size(); ++i) {
    const RationalBridge& b = cls.bridges[i];
    const std::string& a_id = g.vertex(b.anchor_a).id;
    const std::string& b_id = g.vertex(b.anchor_b).id;
    if (assignment.total[i] == 0) {
      edges.emplace_back(a_id, b_id);
      continue;
    }
    std::string x = b.exceptional_pos >= 0 ? g.vertex(b.chain[b.exceptional_pos]).id
                                           : "b" + std::to_string(i);
    for (int k = 1; used.count(x); ++k) x = "b" + std::to_string(i) + "_" + std::to_string(k);
    used.insert(x);
    verts.push_back(VertexData{x, 0, {}});
    edges.emplace_back(a_id, x);
    edges.emplace_back(x, b_id);
    Mask m = b.mask;
    while (m) {
      int v = __builtin_ctzll(m);
      vmap[g.vertex(v).id] = x;
      m &= m - 1;
    }
  }

  return StripOutcome{MarkedDualGraph(std::move(verts), edges), std::move(vmap)};
}

Multidegree lift_multidegree(const MarkedDualGraph& g, const Classification& cls,
                             const BridgeAssignment& assignment, const Multidegree& mdeg0) {
  StripOutcome strip = strip_to_unpointed(g, cls, assignment);
  if (static_cast<int>(mdeg0.size()) != strip.graph.num_vertices())
    throw std::invalid_argument("multidegree size does not match stripped graph");
  if (!is_gieseker_balanced(strip.graph, mdeg0))
    throw std::domain_error("multidegree on the stripped graph violates the basic inequality");

  Multidegree out(g.num_vertices(), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!((cls.core >> v) & 1)) continue;
    long long t = 0;
    for (const RationalTail& tl : cls.tails)
      if (tl.anchor == v) ++t;
    out[v] = mdeg0[strip.graph.index_of(g.vertex(v).id)] + t;
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    if ((cls.tail_vertices >> v) & 1) out[v] = g.endpoints_at(v) - 2;
  for (size_t i = 0; i < cls.bridges.size(); ++i) {
    const RationalBridge& b = cls.bridges[i];
    for (size_t j = 0; j < b.chain.size(); ++j)
      out[b.chain[j]] = g.endpoints_at(b.chain[j]) - 2 +
                        (assignment.total[i] == 1 && assignment.plus_pos[i] == static_cast<int>(j)
                             ? 1
                             : 0);
  }
  return out;
}

std::vector<FiberEntry> forgetful_fiber(const MarkedDualGraph& stable_graph, long long d) {
  StabilityStatus st = stability_status(stable_graph);
  if (!st.stable || total_genus(stable_graph) < 3)
    throw std::domain_error("fiber census needs a stable graph of genus >= 3");
  if (stable_graph.num_edges() > 24)
    throw std::domain_error("fiber census limited to 24 edges");

  std::vector<std::vector<int>> subsets;
  for (Mask s = 0; s < (Mask(1) << stable_graph.num_edges()); ++s) {
    std::vector<int> es;
    for (int e = 0; e < stable_graph.num_edges(); ++e)
      if ((s >> e) & 1) es.push_back(e);
    subsets.push_back(std::move(es));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  std::vector<FiberEntry> out;
  for (const std::vector<int>& s : subsets) {
    BlowUpResult res = blow_up_edges(stable_graph, s);
    if (!stability_status(res.graph).quasistable) continue;
    std::vector<Multidegree> mdegs = enumerate_balanced(res.graph, d);
    out.push_back(FiberEntry{s, std::move(res.graph), std::move(mdegs)});
  }
  return out;
}

}  // namespace balgraph
