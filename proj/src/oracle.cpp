#include "balgraph/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

namespace balgraph {

namespace {

// All graph invariants below are recomputed from raw edge scans so this file
// stays an independent witness against the main modules.

bool o_connected(const MarkedDualGraph& g, Mask z) {
  if (z == 0) return false;
  Mask seen = bit(__builtin_ctzll(z));
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Edge& e : g.edges()) {
      if (!((z >> e.u) & 1) || !((z >> e.v) & 1)) continue;
      Mask nu = seen;
      if ((seen >> e.u) & 1) nu |= bit(e.v);
      if ((seen >> e.v) & 1) nu |= bit(e.u);
      if (nu != seen) seen = nu, grew = true;
    }
  }
  return seen == z;
}

long long o_boundary(const MarkedDualGraph& g, Mask z) {
  long long k = 0;
  for (const Edge& e : g.edges())
    if (((z >> e.u) & 1) != ((z >> e.v) & 1)) ++k;
  return k;
}

long long o_internal(const MarkedDualGraph& g, Mask z) {
  long long c = 0;
  for (const Edge& e : g.edges())
    if (((z >> e.u) & 1) && ((z >> e.v) & 1)) ++c;
  return c;
}

long long o_genus_sum(const MarkedDualGraph& g, Mask z) {
  long long s = 0;
  for (int v = 0; v < g.num_vertices(); ++v)
    if ((z >> v) & 1) s += g.vertex(v).genus;
  return s;
}

long long o_total_genus(const MarkedDualGraph& g) {
  return o_genus_sum(g, g.full_mask()) + g.num_edges() - g.num_vertices() + 1;
}

long long o_degree(const Multidegree& mdeg, Mask z) {
  long long s = 0;
  while (z) {
    s += mdeg[__builtin_ctzll(z)];
    z &= z - 1;
  }
  return s;
}

int o_endpoints(const MarkedDualGraph& g, int v) {
  int c = 0;
  for (const Edge& e : g.edges()) {
    if (e.u == v) ++c;
    if (e.v == v) ++c;
  }
  return c;
}

bool o_has_loop(const MarkedDualGraph& g, int v) {
  for (const Edge& e : g.edges())
    if (e.u == v && e.v == v) return true;
  return false;
}

/// Scaled basic inequality: lower/upper bounds multiplied through by
/// 2(2g-2) so everything stays in integers.
bool o_basic(long long deg, long long d, long long gen, long long w, long long k, long long t,
             long long b) {
  long long D = 2 * gen - 2;
  if (2 * D * deg < 2 * (d * w + (3 * gen - 3 - d) * t) + D * (2 * b - k)) return false;
  if (2 * D * deg > 2 * (d * w + (gen - 1 - d) * t) + D * (k - 2 * b)) return false;
  return true;
}

bool o_quasistable(const MarkedDualGraph& g, const std::vector<Mask>& tails,
                   const std::vector<Mask>& bridges, Mask exceptional) {
  long long gen = o_total_genus(g);
  if (2 * gen - 2 + g.num_markings() <= 0) return false;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.vertex(v).genus != 0) continue;
    int special = o_endpoints(g, v) + static_cast<int>(g.vertex(v).legs.size());
    if (special < 2) return false;
    if (special == 2 && !o_has_loop(g, v) && !g.vertex(v).legs.empty())
      return false;  // destabilizing but marked, hence not exceptional
  }
  for (Mask t : tails)
    if (t & exceptional) return false;
  for (Mask b : bridges)
    if (popcount(b & exceptional) > 1) return false;
  return true;
}

}  // namespace

OracleContext make_oracle_context(const MarkedDualGraph& g) {
  OracleContext ctx;
  ctx.graph = &g;
  ctx.genus = o_total_genus(g);

  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.vertex(v).genus != 0 || o_has_loop(g, v)) continue;
    if (o_endpoints(g, v) == 2 && g.vertex(v).legs.empty()) ctx.exceptional |= bit(v);
  }

  // Candidate tails/bridges: connected genus-0 tree subsets with boundary 1
  // resp. 2; keep the inclusion-maximal ones.
  std::vector<Mask> tail_cand, bridge_cand;
  Mask full = g.full_mask();
  for (Mask z = 1; z < full; ++z) {
    if (!o_connected(g, z)) continue;
    if (o_genus_sum(g, z) != 0) continue;
    if (o_internal(g, z) != popcount(z) - 1) continue;  // not a tree
    long long k = o_boundary(g, z);
    if (k == 1) tail_cand.push_back(z);
    if (k == 2) bridge_cand.push_back(z);
  }
  auto maximal = [](const std::vector<Mask>& cand) {
    std::vector<Mask> out;
    for (Mask a : cand) {
      bool contained = false;
      for (Mask b : cand)
        if (a != b && (a & ~b) == 0) contained = true;
      if (!contained) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  ctx.tails = maximal(tail_cand);
  std::vector<Mask> kept;
  for (Mask b : bridge_cand) {
    bool in_tail = false;
    for (Mask t : ctx.tails)
      if ((b & ~t) == 0) in_tail = true;
    if (!in_tail) kept.push_back(b);
  }
  ctx.bridges = maximal(kept);

  for (Mask t : ctx.tails) {
    ctx.tail_union |= t;
    for (const Edge& e : g.edges()) {
      bool iu = (t >> e.u) & 1, iv = (t >> e.v) & 1;
      if (iu != iv) ctx.tail_anchor.push_back(iu ? e.v : e.u);
    }
  }
  for (Mask b : ctx.bridges) {
    ctx.bridge_union |= b;
    std::vector<int> anchors;
    for (const Edge& e : g.edges()) {
      bool iu = (b >> e.u) & 1, iv = (b >> e.v) & 1;
      if (iu != iv) anchors.push_back(iu ? e.v : e.u);
    }
    ctx.bridge_anchors.emplace_back(anchors[0], anchors[1]);
  }
  ctx.core = full & ~(ctx.tail_union | ctx.bridge_union);
  ctx.quasistable = o_quasistable(g, ctx.tails, ctx.bridges, ctx.exceptional);

  for (Mask z = 1; z < full; ++z) {
    if (!o_connected(g, z)) continue;
    OracleContext::SubcurveRecord rec;
    rec.mask = z;
    rec.k = o_boundary(g, z);
    rec.w = 2 * (o_genus_sum(g, z) + o_internal(g, z) - popcount(z) + 1) - 2 + rec.k;
    bool in_tail = false, in_bridge = false;
    for (Mask t : ctx.tails)
      if ((z & ~t) == 0) in_tail = true;
    for (Mask b : ctx.bridges)
      if ((z & ~b) == 0) in_bridge = true;
    if (in_tail)
      rec.kind = OracleContext::SubcurveRecord::Kind::Tail;
    else if (in_bridge)
      rec.kind = OracleContext::SubcurveRecord::Kind::Bridge;
    ctx.subcurves.push_back(std::move(rec));
  }

  // Core subcurves: subsets of the core connected through core edges or
  // through whole bridges (a bridge carries a path between its two anchors,
  // so two core pieces it joins still bound a connected subcurve).
  auto core_connected = [&](Mask z) {
    Mask comp = bit(__builtin_ctzll(z));
    bool grew = true;
    while (grew) {
      grew = false;
      for (const Edge& e : g.edges()) {
        if (!((z >> e.u) & 1) || !((z >> e.v) & 1)) continue;
        bool cu = (comp >> e.u) & 1, cv = (comp >> e.v) & 1;
        if (cu != cv) comp |= bit(e.u) | bit(e.v), grew = true;
      }
      for (auto [a, b] : ctx.bridge_anchors) {
        if (!((z >> a) & 1) || !((z >> b) & 1)) continue;
        bool ca = (comp >> a) & 1, cb = (comp >> b) & 1;
        if (ca != cb) comp |= bit(a) | bit(b), grew = true;
      }
    }
    return comp == z;
  };
  for (Mask z = ctx.core; z; z = (z - 1) & ctx.core) {
    if (z == full || !core_connected(z)) continue;
    OracleContext::SubcurveRecord rec;
    rec.mask = z;
    rec.kind = OracleContext::SubcurveRecord::Kind::Core;
    rec.k = o_boundary(g, z);
    rec.w = 2 * (o_genus_sum(g, z) + o_internal(g, z) - popcount(z) + 1) - 2 + rec.k;
    for (int a : ctx.tail_anchor)
      if ((z >> a) & 1) ++rec.t;
    for (size_t i = 0; i < ctx.bridges.size(); ++i)
      if (((z >> ctx.bridge_anchors[i].first) & 1) &&
          ((z >> ctx.bridge_anchors[i].second) & 1))
        rec.twice_bridges.push_back(static_cast<int>(i));
    ctx.subcurves.push_back(std::move(rec));
  }
  return ctx;
}

bool naive_is_balanced(const OracleContext& ctx, const Multidegree& mdeg,
                       OracleReading reading) {
  const MarkedDualGraph& g = *ctx.graph;
  if (static_cast<int>(mdeg.size()) != g.num_vertices())
    throw std::invalid_argument("multidegree size does not match graph");
  if (!ctx.quasistable || ctx.genus < 3)
    throw std::domain_error("reference test needs quasistable, genus >= 3");

  for (int v = 0; v < g.num_vertices(); ++v)
    if (((ctx.exceptional >> v) & 1) && mdeg[v] != 1) return false;

  long long d = 0;
  for (long long x : mdeg) d += x;

  std::vector<long long> bridge_deg;
  for (Mask b : ctx.bridges) bridge_deg.push_back(o_degree(mdeg, b));

  if (reading == OracleReading::CoreOnly) {
    using Kind = OracleContext::SubcurveRecord::Kind;
    for (const auto& rec : ctx.subcurves) {
      long long deg = o_degree(mdeg, rec.mask);
      switch (rec.kind) {
        case Kind::Tail:
          if (deg != rec.k - 2) return false;
          break;
        case Kind::Bridge:
          if (deg < rec.k - 2 || deg > rec.k - 1) return false;
          break;
        case Kind::Core: {
          long long b = 0;
          for (int i : rec.twice_bridges)
            if (bridge_deg[i] == 0) ++b;
          if (!o_basic(deg, d, ctx.genus, rec.w, rec.k, rec.t, b)) return false;
          break;
        }
        case Kind::Skip:
          break;
      }
    }
    return true;
  }

  // Literal reading of the definition: totals on maximal tails/bridges plus
  // the basic inequality for every connected proper subcurve not contained in
  // a tail or bridge, overlapping ones included.
  for (Mask t : ctx.tails)
    if (o_degree(mdeg, t) != -1) return false;
  for (long long bd : bridge_deg)
    if (bd != 0 && bd != 1) return false;
  for (Mask z = 1; z < g.full_mask(); ++z) {
    if (!o_connected(g, z)) continue;
    bool contained = false;
    for (Mask t : ctx.tails)
      if ((z & ~t) == 0) contained = true;
    for (Mask b : ctx.bridges)
      if ((z & ~b) == 0) contained = true;
    if (contained) continue;
    long long k = o_boundary(g, z);
    long long w = 2 * (o_genus_sum(g, z) + o_internal(g, z) - popcount(z) + 1) - 2 + k;
    long long t = 0, b = 0;
    for (size_t i = 0; i < ctx.tails.size(); ++i) {
      bool meets = (ctx.tails[i] & z) != 0 || ((z >> ctx.tail_anchor[i]) & 1);
      if (meets && (ctx.tails[i] & ~z) != 0) ++t;
    }
    for (size_t i = 0; i < ctx.bridges.size(); ++i) {
      if (bridge_deg[i] != 0) continue;
      // Both attaching edges must meet z (either endpoint of the edge in z).
      int met = 0;
      for (const Edge& e : g.edges()) {
        bool iu = (ctx.bridges[i] >> e.u) & 1, iv = (ctx.bridges[i] >> e.v) & 1;
        if (iu == iv) continue;
        if (((z >> e.u) & 1) || ((z >> e.v) & 1)) ++met;
      }
      if (met == 2) ++b;
    }
    if (!o_basic(o_degree(mdeg, z), d, ctx.genus, w, k, t, b)) return false;
  }
  return true;
}

bool naive_is_balanced(const MarkedDualGraph& g, const Multidegree& mdeg,
                       OracleReading reading) {
  return naive_is_balanced(make_oracle_context(g), mdeg, reading);
}

namespace {

/// Allowed singleton values for vertex v within [-r, r]; derived from the
/// reference test's own per-vertex constraints, so pruning with these sets
/// loses no solution.
std::vector<long long> allowed_values(const OracleContext& ctx, int v, long long d,
                                      long long r) {
  const MarkedDualGraph& g = *ctx.graph;
  long long k = o_endpoints(g, v);
  std::vector<long long> out;
  auto keep = [&](long long x) {
    if (x >= -r && x <= r) out.push_back(x);
  };
  if ((ctx.exceptional >> v) & 1) {
    keep(1);
  } else if ((ctx.tail_union >> v) & 1) {
    keep(k - 2);
  } else if ((ctx.bridge_union >> v) & 1) {
    keep(k - 2);
    keep(k - 1);
  } else {
    long long w = 2 * g.vertex(v).genus - 2 + k;
    long long t = 0;
    for (int a : ctx.tail_anchor)
      if (a == v) ++t;
    for (long long x = -r; x <= r; ++x)
      if (o_basic(x, d, ctx.genus, w, k, t, 0)) out.push_back(x);
  }
  return out;
}

}  // namespace

long long default_box_radius(const OracleContext& ctx, long long d) {
  const MarkedDualGraph& g = *ctx.graph;
  auto fdiv = [](long long a, long long b) {  // floor(a/b), b > 0
    return a >= 0 ? a / b : -((-a + b - 1) / b);
  };
  auto cdiv = [&](long long a, long long b) { return -fdiv(-a, b); };

  long long r = 0;
  auto grow = [&](long long x) { r = std::max(r, std::abs(x)); };
  for (int v = 0; v < g.num_vertices(); ++v) {
    long long k = o_endpoints(g, v);
    if ((ctx.exceptional >> v) & 1) {
      grow(1);
    } else if ((ctx.tail_union >> v) & 1) {
      grow(k - 2);
    } else if ((ctx.bridge_union >> v) & 1) {
      grow(k - 2);
      grow(k - 1);
    } else {
      long long gen = ctx.genus, D = 2 * gen - 2;
      long long w = 2 * g.vertex(v).genus - 2 + k;
      long long t = 0;
      for (int a : ctx.tail_anchor)
        if (a == v) ++t;
      long long lo = cdiv(2 * (d * w + (3 * gen - 3 - d) * t) - D * k, 2 * D);
      long long hi = fdiv(2 * (d * w + (gen - 1 - d) * t) + D * k, 2 * D);
      if (lo <= hi) {
        grow(lo);
        grow(hi);
      }
    }
  }
  return r + 1;
}

std::vector<Multidegree> brute_enumerate(const OracleContext& ctx, long long d,
                                         long long radius) {
  const MarkedDualGraph& g = *ctx.graph;
  if (!ctx.quasistable) throw std::domain_error("enumeration needs a quasistable graph");
  int nv = g.num_vertices();

  std::vector<std::vector<long long>> allowed(nv);
  for (int v = 0; v < nv; ++v) {
    allowed[v] = allowed_values(ctx, v, d, radius);
    std::sort(allowed[v].begin(), allowed[v].end());
  }
  std::vector<long long> suf_min(nv + 1, 0), suf_max(nv + 1, 0);
  for (int v = nv; v-- > 0;) {
    if (allowed[v].empty()) return {};
    suf_min[v] = suf_min[v + 1] + allowed[v].front();
    suf_max[v] = suf_max[v + 1] + allowed[v].back();
  }

  std::vector<Multidegree> out;
  Multidegree cur(nv, 0);
  auto rec = [&](auto&& self, int v, long long remaining) -> void {
    if (v == nv) {
      if (remaining == 0 && naive_is_balanced(ctx, cur, OracleReading::CoreOnly))
        out.push_back(cur);
      return;
    }
    for (long long x : allowed[v]) {
      long long rest = remaining - x;
      if (rest < suf_min[v + 1] || rest > suf_max[v + 1]) continue;
      cur[v] = x;
      self(self, v + 1, rest);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Multidegree> brute_enumerate(const MarkedDualGraph& g, long long d,
                                         long long radius) {
  return brute_enumerate(make_oracle_context(g), d, radius);
}

MarkedDualGraph random_quasistable(const CorpusParams& params) {
  if (params.maxVertices < 1 || params.maxEdges < 0 || params.maxGenusPerVertex < 0 ||
      params.maxLegs < 0 || params.minGenusPerVertex < 0 ||
      params.minGenusPerVertex > params.maxGenusPerVertex)
    throw std::invalid_argument("bad corpus parameters");
  std::mt19937_64 rng(params.seed);
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  for (int attempt = 0; attempt < 50000; ++attempt) {
    int nv = pick(1, std::min(params.maxVertices, params.maxEdges + 1));
    std::vector<VertexData> verts;
    for (int i = 0; i < nv; ++i)
      verts.push_back(VertexData{"v" + std::to_string(i),
                                 pick(params.minGenusPerVertex, params.maxGenusPerVertex),
                                 {}});
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i < nv; ++i)
      edges.emplace_back(verts[pick(0, i - 1)].id, verts[i].id);
    // Loops and parallel edges come from the extra edges; a lone vertex
    // carries its genus on the vertex itself.
    int extra = nv == 1 ? 0 : pick(0, params.maxEdges - (nv - 1));
    for (int i = 0; i < extra; ++i)
      edges.emplace_back(verts[pick(0, nv - 1)].id, verts[pick(0, nv - 1)].id);

    int n = pick(0, params.maxLegs);
    for (int l = 1; l <= n; ++l) verts[pick(0, nv - 1)].legs.insert(l);

    MarkedDualGraph g(verts, edges);
    if (o_total_genus(g) < 3) continue;
    OracleContext ctx = make_oracle_context(g);
    if (ctx.quasistable) return g;
  }
  throw std::runtime_error("quasistable sampling exhausted its retry budget");
}

}  // namespace balgraph
