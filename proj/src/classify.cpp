#include "balgraph/classify.hpp"

#include <algorithm>

namespace balgraph {

namespace {

int endpoints_within(const MarkedDualGraph& g, int v, Mask world) {
  int c = 0;
  for (const Edge& e : g.edges()) {
    if (!((world >> e.u) & 1) || !((world >> e.v) & 1)) continue;
    if (e.u == v) ++c;
    if (e.v == v) ++c;
  }
  return c;
}

std::vector<Mask> components_within(const MarkedDualGraph& g, Mask world) {
  std::vector<Mask> comps;
  Mask left = world;
  while (left) {
    int s = __builtin_ctzll(left);
    Mask comp = bit(s);
    bool grew = true;
    while (grew) {
      grew = false;
      for (const Edge& e : g.edges()) {
        Mask eu = bit(e.u), ev = bit(e.v);
        if (!(eu & world) || !(ev & world)) continue;
        if ((comp & eu) && !(comp & ev)) comp |= ev, grew = true;
        else if ((comp & ev) && !(comp & eu)) comp |= eu, grew = true;
      }
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}

}  // namespace

Classification classify(const MarkedDualGraph& g) {
  const int nv = g.num_vertices();
  Classification cls;

  for (int v = 0; v < nv; ++v) {
    if (g.vertex(v).genus != 0 || g.has_loop_at(v)) continue;
    int special = g.endpoints_at(v) + static_cast<int>(g.vertex(v).legs.size());
    if (special == 2) {
      cls.destabilizing |= bit(v);
      if (g.vertex(v).legs.empty()) cls.exceptional |= bit(v);
    }
  }

  // Peel pendant genus-0 trees.  What remains carries all the genus.
  Mask remaining = g.full_mask();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < nv; ++v) {
      if (!((remaining >> v) & 1)) continue;
      if (g.vertex(v).genus != 0 || g.has_loop_at(v)) continue;
      if (popcount(remaining) == 1) continue;
      if (endpoints_within(g, v, remaining) == 1) {
        remaining &= ~bit(v);
        changed = true;
      }
    }
  }
  Mask pruned = g.full_mask() & ~remaining;
  if (remaining == 0 || total_genus(g) < 1)
    throw std::domain_error("classification needs total genus >= 1");

  struct PendantTree {
    Mask mask;
    int anchor;
    int attach_edge;
  };
  std::vector<PendantTree> pendants;
  for (Mask comp : components_within(g, pruned)) {
    PendantTree t{comp, -1, -1};
    for (int e = 0; e < g.num_edges(); ++e) {
      bool iu = (comp >> g.edge(e).u) & 1, iv = (comp >> g.edge(e).v) & 1;
      if (iu == iv) continue;
      if (t.attach_edge != -1) throw std::logic_error("pendant tree with two attaching edges");
      t.attach_edge = e;
      t.anchor = iu ? g.edge(e).v : g.edge(e).u;
    }
    if (t.attach_edge == -1) throw std::logic_error("pendant tree with no attaching edge");
    pendants.push_back(t);
  }
  cls.tail_vertices = pruned;

  // Chain candidates: genus-0 vertices whose whole non-tail valence is 2.
  Mask candidates = 0;
  for (int v = 0; v < nv; ++v) {
    if (!((remaining >> v) & 1)) continue;
    if (g.vertex(v).genus != 0 || g.has_loop_at(v)) continue;
    if (endpoints_within(g, v, remaining) == 2) candidates |= bit(v);
  }

  for (Mask comp : components_within(g, candidates)) {
    std::vector<std::pair<int, int>> externals;  // (edge index, chain vertex)
    for (int e = 0; e < g.num_edges(); ++e) {
      bool iu = (comp >> g.edge(e).u) & 1, iv = (comp >> g.edge(e).v) & 1;
      if (!((remaining >> g.edge(e).u) & 1) || !((remaining >> g.edge(e).v) & 1)) continue;
      if (iu != iv) externals.emplace_back(e, iu ? g.edge(e).u : g.edge(e).v);
    }
    if (externals.empty()) continue;  // closed rational cycle carrying the genus: core
    if (externals.size() != 2) throw std::logic_error("bridge chain with odd boundary");

    // Orient the chain so the first attaching edge is the canonically smaller one.
    auto key = [&](const std::pair<int, int>& x) {
      int anchor = g.edge(x.first).u == x.second ? g.edge(x.first).v : g.edge(x.first).u;
      return std::tuple(g.vertex(anchor).id, g.vertex(x.second).id, x.first);
    };
    if (key(externals[1]) < key(externals[0])) std::swap(externals[0], externals[1]);

    RationalBridge b;
    b.attach_edge_a = externals[0].first;
    b.attach_edge_b = externals[1].first;
    b.anchor_a = g.edge(b.attach_edge_a).u == externals[0].second ? g.edge(b.attach_edge_a).v
                                                                  : g.edge(b.attach_edge_a).u;
    b.anchor_b = g.edge(b.attach_edge_b).u == externals[1].second ? g.edge(b.attach_edge_b).v
                                                                  : g.edge(b.attach_edge_b).u;
    // Walk the path from the first end.
    int cur = externals[0].second, prev = -1;
    while (true) {
      b.chain.push_back(cur);
      int next = -1;
      for (const Edge& e : g.edges()) {
        if (!((comp >> e.u) & 1) || !((comp >> e.v) & 1)) continue;
        int other = e.u == cur ? e.v : (e.v == cur ? e.u : -1);
        if (other >= 0 && other != prev) next = other;
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    if (static_cast<int>(b.chain.size()) != popcount(comp))
      throw std::logic_error("bridge chain walk did not cover component");

    b.mask = comp;
    b.chain_tails.assign(b.chain.size(), 0);
    for (const PendantTree& t : pendants) {
      auto it = std::find(b.chain.begin(), b.chain.end(), t.anchor);
      if (it != b.chain.end()) {
        b.chain_tails[it - b.chain.begin()] |= t.mask;
        b.mask |= t.mask;
      }
    }
    for (size_t i = 0; i < b.chain.size(); ++i)
      if (cls.exceptional & bit(b.chain[i])) b.exceptional_pos = static_cast<int>(i);
    cls.bridges.push_back(b);
  }

  std::sort(cls.bridges.begin(), cls.bridges.end(),
            [](const RationalBridge& a, const RationalBridge& b) { return a.mask < b.mask; });
  for (const RationalBridge& b : cls.bridges) cls.bridge_vertices |= b.mask;

  for (const PendantTree& t : pendants)
    if (!((cls.bridge_vertices >> t.anchor) & 1))
      cls.tails.push_back(RationalTail{t.mask, t.anchor, t.attach_edge});
  std::sort(cls.tails.begin(), cls.tails.end(),
            [](const RationalTail& a, const RationalTail& b) { return a.mask < b.mask; });

  cls.core = g.full_mask() & ~(cls.tail_vertices | cls.bridge_vertices);

  // Tails and bridges must partition their union; overlap would mean the
  // maximal-chain decomposition is not well defined.
  Mask seen = 0;
  for (const RationalTail& t : cls.tails) {
    if (seen & t.mask) throw std::logic_error("overlapping maximal tails");
    seen |= t.mask;
  }
  for (const RationalBridge& b : cls.bridges) {
    if (seen & b.mask) throw std::logic_error("overlapping maximal tails/bridges");
    seen |= b.mask;
  }
  return cls;
}

StabilityStatus stability_status(const MarkedDualGraph& g) {
  StabilityStatus st;
  long long gen = total_genus(g);
  int n = g.num_markings();
  if (2 * gen - 2 + n <= 0) return st;

  st.semistable = true;
  st.stable = true;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.vertex(v).genus != 0) continue;
    int special = g.endpoints_at(v) + static_cast<int>(g.vertex(v).legs.size());
    if (special < 2) st.semistable = false;
    if (special < 3) st.stable = false;
  }
  if (!st.semistable) return st;

  if (gen < 1) {
    // A rational tree: every destabilizing component sits in a rational
    // tail, so quasistability forces stability.
    st.quasistable = st.stable;
    return st;
  }

  Classification cls = classify(g);
  bool ok = (cls.destabilizing & ~cls.exceptional) == 0;
  if (cls.exceptional & cls.tail_vertices) ok = false;
  for (const RationalBridge& b : cls.bridges) {
    int count = 0;
    for (int v : b.chain)
      if (cls.exceptional & bit(v)) ++count;
    if (count > 1) ok = false;
  }
  // Exceptional vertices outside every bridge (and every tail) cannot occur
  // in a connected graph of positive genus, but guard anyway.
  if (cls.exceptional & cls.core) ok = false;
  st.quasistable = ok;
  return st;
}

std::vector<Mask> connected_core_subcurves(const MarkedDualGraph& g, const Classification& cls) {
  // Two core vertices joined only through a maximal bridge still bound a
  // connected subcurve of the curve (the bridge passes between them), so the
  // bridge anchors act as extra adjacencies here.
  std::vector<std::pair<int, int>> links;
  for (const Edge& e : g.edges())
    if (((cls.core >> e.u) & 1) && ((cls.core >> e.v) & 1)) links.emplace_back(e.u, e.v);
  for (const RationalBridge& b : cls.bridges) links.emplace_back(b.anchor_a, b.anchor_b);

  auto linked_connected = [&](Mask s) {
    Mask comp = bit(__builtin_ctzll(s));
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto [u, v] : links) {
        Mask mu = bit(u) & s, mv = bit(v) & s;
        if ((comp & mu) && mv && !(comp & mv)) comp |= mv, grew = true;
        else if ((comp & mv) && mu && !(comp & mu)) comp |= mu, grew = true;
      }
    }
    return comp == s;
  };

  std::vector<Mask> out;
  Mask core = cls.core;
  for (Mask s = core; s; s = (s - 1) & core) {
    if (s == g.full_mask()) continue;
    if (linked_connected(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace balgraph
