#include "balgraph/balance.hpp"

#include <algorithm>
#include <numeric>

namespace balgraph {

DegreeBounds degree_bounds(const MarkedDualGraph& g, const Classification& cls, Mask z,
                           long long d, int zero_bridges_on_z, int tails_on_z) {
  (void)cls;
  long long gen = total_genus(g);
  if (gen < 3) throw std::domain_error("degree bounds need genus >= 3");
  SubcurveInvariants inv = subcurve_invariants(g, z);
  long long D = 2 * gen - 2;
  long long t = tails_on_z, b = zero_bridges_on_z;
  DegreeBounds out;
  out.lower = Rational(2 * (d * inv.omega_degree + (3 * gen - 3 - d) * t) + 2 * D * b - D * inv.boundary,
                       2 * D);
  out.upper = Rational(2 * (d * inv.omega_degree + (gen - 1 - d) * t) - 2 * D * b + D * inv.boundary,
                       2 * D);
  return out;
}

ForcedDegrees forced_tail_bridge_degrees(const MarkedDualGraph& g, const Classification& cls) {
  if (!stability_status(g).quasistable)
    throw std::domain_error("forced degrees need a quasistable graph");
  ForcedDegrees out;
  for (int v = 0; v < g.num_vertices(); ++v)
    if ((cls.tail_vertices >> v) & 1) out.tail_degree[v] = g.endpoints_at(v) - 2;
  for (const RationalBridge& br : cls.bridges) {
    BridgeChoice c;
    for (int v : br.chain) c.base.push_back(g.endpoints_at(v) - 2);
    c.forced_plus = br.exceptional_pos;
    out.bridges.push_back(std::move(c));
  }
  return out;
}

BalanceContext make_balance_context(const MarkedDualGraph& g) {
  BalanceContext ctx;
  ctx.graph = &g;
  ctx.genus = total_genus(g);
  ctx.quasistable = stability_status(g).quasistable;
  if (ctx.genus >= 1) {
    ctx.cls = classify(g);
    if (ctx.quasistable) ctx.forced = forced_tail_bridge_degrees(g, ctx.cls);
    ctx.core_subcurves = connected_core_subcurves(g, ctx.cls);
    for (Mask z : ctx.core_subcurves) {
      BalanceContext::CoreSubcurveData cd;
      cd.mask = z;
      SubcurveInvariants inv = subcurve_invariants(g, z);
      cd.w = inv.omega_degree;
      cd.k = inv.boundary;
      cd.tails = 0;
      for (const RationalTail& t : ctx.cls.tails)
        if ((z >> t.anchor) & 1) ++cd.tails;
      for (size_t i = 0; i < ctx.cls.bridges.size(); ++i) {
        const RationalBridge& b = ctx.cls.bridges[i];
        if (((z >> b.anchor_a) & 1) && ((z >> b.anchor_b) & 1))
          cd.twice_bridges.push_back(static_cast<int>(i));
      }
      ctx.core_data.push_back(std::move(cd));
    }
  }
  return ctx;
}

namespace {

void require_balance_pre(const BalanceContext& ctx, const Multidegree& mdeg) {
  if (static_cast<int>(mdeg.size()) != ctx.graph->num_vertices())
    throw std::invalid_argument("multidegree size does not match graph");
  if (ctx.genus < 3) throw std::domain_error("balanced test needs genus >= 3");
  if (!ctx.quasistable) throw std::domain_error("balanced test needs a quasistable graph");
}

long long mask_degree(const Multidegree& mdeg, Mask z) {
  long long s = 0;
  while (z) {
    int v = __builtin_ctzll(z);
    s += mdeg[v];
    z &= z - 1;
  }
  return s;
}

}  // namespace

BalanceReport is_balanced(const BalanceContext& ctx, const Multidegree& mdeg) {
  require_balance_pre(ctx, mdeg);
  const MarkedDualGraph& g = *ctx.graph;
  BalanceReport rep;
  auto fail = [&](ViolationKind kind, Mask z, Rational lo, Rational hi, long long actual) {
    rep.verdict = false;
    rep.first_violation = BalanceViolation{kind, z, lo, hi, actual};
  };

  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!((ctx.cls.exceptional >> v) & 1)) continue;
    if (mdeg[v] != 1) {
      fail(ViolationKind::ExceptionalDegree, bit(v), 1, 1, mdeg[v]);
      return rep;
    }
  }
  for (const RationalTail& t : ctx.cls.tails) {
    if (mask_degree(mdeg, t.mask) != -1) {
      fail(ViolationKind::TailDegree, t.mask, -1, -1, mask_degree(mdeg, t.mask));
      return rep;
    }
  }
  for (const auto& [v, forced] : ctx.forced.tail_degree) {
    if (mdeg[v] != forced) {
      fail(ViolationKind::TailVertexForced, bit(v), forced, forced, mdeg[v]);
      return rep;
    }
  }
  for (size_t i = 0; i < ctx.cls.bridges.size(); ++i) {
    const RationalBridge& br = ctx.cls.bridges[i];
    const BridgeChoice& ch = ctx.forced.bridges[i];
    int plusses = 0;
    bool ok = true;
    for (size_t j = 0; j < br.chain.size(); ++j) {
      long long delta = mdeg[br.chain[j]] - ch.base[j];
      if (delta != 0 && delta != 1) ok = false;
      if (delta == 1) ++plusses;
      if (ch.forced_plus >= 0 && delta != (static_cast<int>(j) == ch.forced_plus ? 1 : 0))
        ok = false;
    }
    if (plusses > 1) ok = false;
    if (!ok) {
      fail(ViolationKind::BridgePattern, br.mask, 0, 1, mask_degree(mdeg, br.mask));
      return rep;
    }
  }

  long long d = total_degree(mdeg);
  long long gen = ctx.genus, D = 2 * gen - 2;
  std::vector<bool> bridge_zero(ctx.cls.bridges.size(), false);
  for (size_t i = 0; i < ctx.cls.bridges.size(); ++i)
    bridge_zero[i] = mask_degree(mdeg, ctx.cls.bridges[i].mask) == 0;

  for (const auto& cd : ctx.core_data) {
    long long b = 0;
    for (int bi : cd.twice_bridges)
      if (bridge_zero[bi]) ++b;
    long long deg = mask_degree(mdeg, cd.mask);
    long long lo2 = 2 * (d * cd.w + (3 * gen - 3 - d) * cd.tails) + 2 * D * b - D * cd.k;
    long long hi2 = 2 * (d * cd.w + (gen - 1 - d) * cd.tails) - 2 * D * b + D * cd.k;
    if (2 * D * deg < lo2 || 2 * D * deg > hi2) {
      fail(ViolationKind::CoreInequality, cd.mask, Rational(lo2, 2 * D), Rational(hi2, 2 * D), deg);
      return rep;
    }
  }
  rep.verdict = true;
  return rep;
}

BalanceReport is_balanced(const MarkedDualGraph& g, const Multidegree& mdeg) {
  return is_balanced(make_balance_context(g), mdeg);
}

std::vector<Multidegree> enumerate_balanced(const BalanceContext& ctx, long long d) {
  {
    Multidegree probe(ctx.graph->num_vertices(), 0);
    require_balance_pre(ctx, probe);
  }
  const MarkedDualGraph& g = *ctx.graph;
  std::vector<Multidegree> out;

  if (g.num_vertices() == 1) {
    out.push_back(Multidegree{d});
    return out;
  }

  Multidegree base(g.num_vertices(), 0);
  for (const auto& [v, forced] : ctx.forced.tail_degree) base[v] = forced;

  std::vector<int> core;
  for (int v = 0; v < g.num_vertices(); ++v)
    if ((ctx.cls.core >> v) & 1) core.push_back(v);

  // Bridge patterns: placement of the optional +1 per bridge (-1 = none).
  std::vector<std::vector<int>> bridge_options;
  for (const BridgeChoice& ch : ctx.forced.bridges) {
    std::vector<int> opts;
    if (ch.forced_plus >= 0) {
      opts.push_back(ch.forced_plus);
    } else {
      opts.push_back(-1);
      for (size_t j = 0; j < ch.base.size(); ++j) opts.push_back(static_cast<int>(j));
    }
    bridge_options.push_back(std::move(opts));
  }

  std::vector<int> choice(ctx.cls.bridges.size(), 0);
  auto emit_for_choice = [&]() {
    Multidegree md = base;
    long long used = 0;
    for (size_t i = 0; i < ctx.cls.bridges.size(); ++i) {
      const RationalBridge& br = ctx.cls.bridges[i];
      const BridgeChoice& ch = ctx.forced.bridges[i];
      int plus = bridge_options[i][choice[i]];
      for (size_t j = 0; j < br.chain.size(); ++j)
        md[br.chain[j]] = ch.base[j] + (static_cast<int>(j) == plus ? 1 : 0);
    }
    for (int v = 0; v < g.num_vertices(); ++v)
      if (!((ctx.cls.core >> v) & 1)) used += md[v];

    long long gen = ctx.genus, D = 2 * gen - 2;
    // Singleton windows at this d; b for {v} counts zero bridges looping on v.
    std::vector<long long> lo(core.size()), hi(core.size());
    for (size_t i = 0; i < core.size(); ++i) {
      int v = core[i];
      long long b = 0;
      for (size_t bi = 0; bi < ctx.cls.bridges.size(); ++bi) {
        const RationalBridge& br = ctx.cls.bridges[bi];
        if (br.anchor_a == v && br.anchor_b == v && bridge_options[bi][choice[bi]] == -1) ++b;
      }
      long long w = 2 * g.vertex(v).genus - 2 + g.endpoints_at(v);
      long long k = g.endpoints_at(v);
      long long t = 0;
      for (const RationalTail& tl : ctx.cls.tails)
        if (tl.anchor == v) ++t;
      Rational m(2 * (d * w + (3 * gen - 3 - d) * t) + 2 * D * b - D * k, 2 * D);
      Rational M(2 * (d * w + (gen - 1 - d) * t) - 2 * D * b + D * k, 2 * D);
      lo[i] = m.ceil();
      hi[i] = M.floor();
    }

    std::vector<long long> tail_min(core.size() + 1, 0), tail_max(core.size() + 1, 0);
    for (size_t i = core.size(); i-- > 0;) {
      tail_min[i] = tail_min[i + 1] + lo[i];
      tail_max[i] = tail_max[i + 1] + hi[i];
    }

    Multidegree md_work = md;
    auto rec = [&](auto&& self, size_t i, long long remaining) -> void {
      if (i == core.size()) {
        if (remaining != 0) return;
        if (is_balanced(ctx, md_work).verdict) out.push_back(md_work);
        return;
      }
      for (long long x = lo[i]; x <= hi[i]; ++x) {
        long long rest = remaining - x;
        if (rest < tail_min[i + 1] || rest > tail_max[i + 1]) continue;
        md_work[core[i]] = x;
        self(self, i + 1, rest);
      }
    };
    rec(rec, 0, d - used);
  };

  auto iterate_choices = [&](auto&& self, size_t i) -> void {
    if (i == bridge_options.size()) {
      emit_for_choice();
      return;
    }
    for (size_t c = 0; c < bridge_options[i].size(); ++c) {
      choice[i] = static_cast<int>(c);
      self(self, i + 1);
    }
  };
  iterate_choices(iterate_choices, 0);

  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Multidegree> enumerate_balanced(const MarkedDualGraph& g, long long d) {
  return enumerate_balanced(make_balance_context(g), d);
}

bool is_gieseker_balanced(const MarkedDualGraph& g, const std::vector<Mask>& proper_subcurves,
                          const Multidegree& mdeg) {
  if (g.num_markings() > 0) throw std::domain_error("Gieseker test is for unpointed graphs");
  if (static_cast<int>(mdeg.size()) != g.num_vertices())
    throw std::invalid_argument("multidegree size does not match graph");
  long long gen = total_genus(g), D = 2 * gen - 2;
  long long d = total_degree(mdeg);

  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.vertex(v).genus != 0 || g.has_loop_at(v)) continue;
    if (g.endpoints_at(v) == 2 && g.vertex(v).legs.empty() && mdeg[v] != 1) return false;
  }
  for (Mask z : proper_subcurves) {
    SubcurveInvariants inv = subcurve_invariants(g, z);
    long long deg = mask_degree(mdeg, z);
    if (2 * D * deg < -D * inv.boundary + 2 * d * inv.omega_degree) return false;
    if (2 * D * deg > 2 * d * inv.omega_degree + D * inv.boundary) return false;
  }
  return true;
}

bool is_gieseker_balanced(const MarkedDualGraph& g, const Multidegree& mdeg) {
  if (!stability_status(g).quasistable)
    throw std::domain_error("Gieseker test needs a quasistable graph");
  return is_gieseker_balanced(g, connected_subcurves(g, false), mdeg);
}

Multidegree twist_by_omega(const BalanceContext& ctx, const Multidegree& mdeg, long long m) {
  require_balance_pre(ctx, mdeg);
  const MarkedDualGraph& g = *ctx.graph;
  Multidegree out = mdeg;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!((ctx.cls.core >> v) & 1)) continue;
    long long w = 2 * g.vertex(v).genus - 2 + g.endpoints_at(v);
    long long t = 0;
    for (const RationalTail& tl : ctx.cls.tails)
      if (tl.anchor == v) ++t;
    out[v] += m * (w - t);
  }
  return out;
}

bool dm_condition(long long d, long long g) {
  if (g < 3) throw std::domain_error("dm condition needs genus >= 3");
  long long a = d - g + 1, b = 2 * g - 2;
  return std::gcd(a < 0 ? -a : a, b) == 1;
}

long long stack_dimension(long long g, long long n) {
  if (g < 3 || n < 0) throw std::domain_error("stack dimension needs g >= 3, n >= 0");
  return 4 * g - 3 + n;
}

}  // namespace balgraph
