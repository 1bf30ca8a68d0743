#include "balgraph/balance.hpp"
#include "balgraph/classify.hpp"
#include "balgraph/cohomology.hpp"
#include "balgraph/graph.hpp"
#include "balgraph/io.hpp"
#include "balgraph/morphisms.hpp"
#include "balgraph/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace balgraph;

GraphDocument load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph_document(ss.str());
}

Multidegree resolve_mdeg(const GraphDocument& doc, const std::string& spec) {
  auto it = doc.multidegrees.find(spec);
  if (it != doc.multidegrees.end()) return it->second;
  return parse_multidegree(doc.graph, spec);
}

std::string ids_of(const MarkedDualGraph& g, Mask m) {
  std::string out = "{";
  bool first = true;
  while (m) {
    int v = __builtin_ctzll(m);
    m &= m - 1;
    if (!first) out += ",";
    out += g.vertex(v).id;
    first = false;
  }
  return out + "}";
}

const char* kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::ExceptionalDegree: return "exceptional-degree";
    case ViolationKind::TailDegree: return "tail-degree";
    case ViolationKind::TailVertexForced: return "tail-vertex-forced";
    case ViolationKind::BridgePattern: return "bridge-pattern";
    case ViolationKind::CoreInequality: return "core-inequality";
  }
  return "?";
}

void print_report(const MarkedDualGraph& g, const CriterionReport& rep) {
  if (rep.holds) {
    std::cout << "holds\n";
  } else {
    std::cout << "fails Z=" << ids_of(g, rep.witness->subcurve)
              << " deg=" << rep.witness->degree << " threshold=" << rep.witness->threshold
              << "\n";
  }
}

PointLocation parse_location(const MarkedDualGraph&, const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("location must be vertex:ID, node:EDGE or marking:LABEL");
  std::string kind = spec.substr(0, colon), ref = spec.substr(colon + 1);
  if (kind == "vertex") return PointLocation::on_vertex(ref);
  try {
    if (kind == "node") return PointLocation::at_node(std::stoi(ref));
    if (kind == "marking") return PointLocation::at_marking(std::stoi(ref));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad reference in location: " + ref);
  }
  throw std::invalid_argument("unknown location kind: " + kind);
}

int run(int argc, char** argv) {
  CLI::App app{"Balanced multidegrees on marked dual graphs"};
  app.require_subcommand(1);

  std::string file, mdeg_spec, at_spec, bridges_spec, criterion;
  long long d = 0, g_arg = 0, m_arg = 0, k_arg = 0;
  bool drop_last = false;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "graph document (JSON)")->required();
  };

  auto* c_validate = app.add_subcommand("validate", "structural checks");
  add_file(c_validate);
  auto* c_classify = app.add_subcommand("classify", "tail/bridge/core decomposition");
  add_file(c_classify);
  auto* c_status = app.add_subcommand("status", "stability flags");
  add_file(c_status);
  auto* c_check = app.add_subcommand("check-balanced", "balanced test for a multidegree");
  add_file(c_check);
  c_check->add_option("mdeg", mdeg_spec, "id=deg,... or a named multidegree")->required();
  auto* c_enum = app.add_subcommand("enumerate", "all balanced multidegrees of total d");
  add_file(c_enum);
  c_enum->add_option("-d", d, "total degree")->required();
  auto* c_contract = app.add_subcommand("contract", "contract the last marking");
  add_file(c_contract);
  c_contract->add_option("--mdeg", mdeg_spec, "balanced multidegree")->required();
  auto* c_stab = app.add_subcommand("stabilize", "add a marking at a location");
  add_file(c_stab);
  c_stab->add_option("--mdeg", mdeg_spec, "balanced multidegree")->required();
  c_stab->add_option("--at", at_spec, "vertex:ID | node:EDGE | marking:LABEL")->required();
  auto* c_stable = app.add_subcommand("stable-model", "contract all exceptional components");
  add_file(c_stable);
  auto* c_strip = app.add_subcommand("strip", "remove tails/bridges and markings");
  add_file(c_strip);
  c_strip->add_option("--bridges", bridges_spec, "per-bridge totals: 0 | 1 | 1@pos, comma-separated");
  auto* c_twist = app.add_subcommand("twist", "twist by the m-th dualizing power");
  add_file(c_twist);
  c_twist->add_option("--mdeg", mdeg_spec, "balanced multidegree")->required();
  c_twist->add_option("-m", m_arg, "twist power")->required();
  auto* c_fibers = app.add_subcommand("fibers", "census over a stable graph");
  add_file(c_fibers);
  c_fibers->add_option("-d", d, "total degree")->required();
  auto* c_crit = app.add_subcommand("criteria", "degree criteria");
  add_file(c_crit);
  c_crit->add_option("name", criterion,
                     "h1 | base-point-free | h0 | normal-generation | dualizing-power | large-d")
      ->required();
  c_crit->add_option("--mdeg", mdeg_spec, "multidegree (not used by dualizing-power)");
  c_crit->add_option("-m", m_arg, "power for dualizing-power");
  c_crit->add_option("-k", k_arg, "twist exponent for large-d");
  c_crit->add_flag("--drop-last", drop_last, "exclude the last marking (dualizing-power)");
  auto* c_dm = app.add_subcommand("dm-check", "gcd(d-g+1, 2g-2) = 1 test");
  c_dm->add_option("-d", d, "total degree")->required();
  c_dm->add_option("-g", g_arg, "genus")->required();
  auto* c_info = app.add_subcommand("info", "genus, markings, dimension");
  add_file(c_info);
  auto* c_dot = app.add_subcommand("export-dot", "Graphviz output");
  add_file(c_dot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (c_validate->parsed()) {
    ValidationResult r = validate(load(file).graph);
    if (r.ok()) {
      std::cout << "ok\n";
      return 0;
    }
    for (const std::string& v : r.violations) std::cout << v << "\n";
    return 1;
  }
  if (c_classify->parsed()) {
    GraphDocument doc = load(file);
    Classification cls = classify(doc.graph);
    std::cout << "core=" << ids_of(doc.graph, cls.core) << "\n";
    for (const RationalTail& t : cls.tails)
      std::cout << "tail=" << ids_of(doc.graph, t.mask) << " anchor="
                << doc.graph.vertex(t.anchor).id << "\n";
    for (const RationalBridge& b : cls.bridges)
      std::cout << "bridge=" << ids_of(doc.graph, b.mask) << " anchors="
                << doc.graph.vertex(b.anchor_a).id << "," << doc.graph.vertex(b.anchor_b).id
                << "\n";
    std::cout << "exceptional=" << ids_of(doc.graph, cls.exceptional) << "\n";
    std::cout << "destabilizing=" << ids_of(doc.graph, cls.destabilizing) << "\n";
    return 0;
  }
  if (c_status->parsed()) {
    StabilityStatus st = stability_status(load(file).graph);
    std::cout << "semistable=" << (st.semistable ? "true" : "false")
              << " stable=" << (st.stable ? "true" : "false")
              << " quasistable=" << (st.quasistable ? "true" : "false") << "\n";
    return 0;
  }
  if (c_check->parsed()) {
    GraphDocument doc = load(file);
    Multidegree m = resolve_mdeg(doc, mdeg_spec);
    BalanceReport rep = is_balanced(doc.graph, m);
    if (rep.verdict) {
      std::cout << "balanced\n";
    } else {
      const BalanceViolation& v = *rep.first_violation;
      std::cout << "violation kind=" << kind_name(v.kind) << " Z="
                << ids_of(doc.graph, v.subcurve) << " bounds=[" << v.lower.str() << ","
                << v.upper.str() << "] actual=" << v.actual << "\n";
    }
    return 0;
  }
  if (c_enum->parsed()) {
    GraphDocument doc = load(file);
    for (const Multidegree& m : enumerate_balanced(doc.graph, d))
      std::cout << format_multidegree(doc.graph, m) << "\n";
    return 0;
  }
  if (c_contract->parsed()) {
    GraphDocument doc = load(file);
    ContractionOutcome out = contract_last_marking(doc.graph, resolve_mdeg(doc, mdeg_spec));
    switch (out.delta.kind) {
      case PointLocation::Kind::OnVertex:
        std::cout << "delta=vertex:" << out.delta.vertex << "\n";
        break;
      case PointLocation::Kind::AtNode:
        std::cout << "delta=node:" << out.delta.edge << "\n";
        break;
      case PointLocation::Kind::AtMarking:
        std::cout << "delta=marking:" << out.delta.marking << "\n";
        break;
    }
    if (out.contracted) std::cout << "contracted=" << *out.contracted << "\n";
    std::cout << serialize_graph_document(out.graph, {{"result", out.mdeg}});
    return 0;
  }
  if (c_stab->parsed()) {
    GraphDocument doc = load(file);
    StabilizationOutcome out =
        stabilize(doc.graph, resolve_mdeg(doc, mdeg_spec), parse_location(doc.graph, at_spec));
    std::cout << serialize_graph_document(out.graph, {{"result", out.mdeg}});
    return 0;
  }
  if (c_stable->parsed()) {
    GraphDocument doc = load(file);
    StableModelOutcome out = stable_model(doc.graph);
    std::cout << serialize_graph_document(out.graph, {});
    return 0;
  }
  if (c_strip->parsed()) {
    GraphDocument doc = load(file);
    Classification cls = classify(doc.graph);
    BridgeAssignment assignment = default_bridge_assignment(cls);
    if (!bridges_spec.empty()) {
      assignment.total.clear();
      assignment.plus_pos.clear();
      std::stringstream ss(bridges_spec);
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto at = item.find('@');
        try {
          assignment.total.push_back(std::stoi(item.substr(0, at)));
          assignment.plus_pos.push_back(
              at == std::string::npos ? 0 : std::stoi(item.substr(at + 1)));
        } catch (const std::exception&) {
          throw std::invalid_argument("bad bridge assignment token: " + item);
        }
      }
    }
    StripOutcome out = strip_to_unpointed(doc.graph, cls, assignment);
    std::cout << serialize_graph_document(out.graph, {});
    return 0;
  }
  if (c_twist->parsed()) {
    GraphDocument doc = load(file);
    BalanceContext ctx = make_balance_context(doc.graph);
    Multidegree out = twist_by_omega(ctx, resolve_mdeg(doc, mdeg_spec), m_arg);
    std::cout << format_multidegree(doc.graph, out) << "\n";
    return 0;
  }
  if (c_fibers->parsed()) {
    GraphDocument doc = load(file);
    for (const FiberEntry& entry : forgetful_fiber(doc.graph, d)) {
      std::cout << "S={";
      for (size_t i = 0; i < entry.blown_edges.size(); ++i)
        std::cout << (i ? "," : "") << entry.blown_edges[i];
      std::cout << "} count=" << entry.multidegrees.size() << "\n";
      for (const Multidegree& m : entry.multidegrees)
        std::cout << "  " << format_multidegree(entry.graph, m) << "\n";
    }
    return 0;
  }
  if (c_crit->parsed()) {
    GraphDocument doc = load(file);
    auto need_mdeg = [&]() {
      if (mdeg_spec.empty()) throw std::invalid_argument("--mdeg is required for " + criterion);
      return resolve_mdeg(doc, mdeg_spec);
    };
    if (criterion == "h1") {
      print_report(doc.graph, h1_vanishing(doc.graph, need_mdeg()));
    } else if (criterion == "base-point-free") {
      print_report(doc.graph, base_point_free_criterion(doc.graph, need_mdeg()));
    } else if (criterion == "h0") {
      auto h0 = h0_if_criterion(doc.graph, need_mdeg());
      if (h0)
        std::cout << "h0=" << *h0 << "\n";
      else
        std::cout << "inconclusive\n";
    } else if (criterion == "normal-generation") {
      auto [rep, shifted] = normal_generation_hypothesis(doc.graph, need_mdeg());
      print_report(doc.graph, rep);
      std::cout << "shifted=" << format_multidegree(doc.graph, shifted) << "\n";
    } else if (criterion == "dualizing-power") {
      if (m_arg == 0) throw std::invalid_argument("-m is required for dualizing-power");
      print_report(doc.graph, dualizing_power_report(doc.graph, m_arg, drop_last));
    } else if (criterion == "large-d") {
      print_report(doc.graph, balanced_large_d_report(doc.graph, need_mdeg(), k_arg));
    } else {
      throw std::invalid_argument("unknown criterion: " + criterion);
    }
    return 0;
  }
  if (c_dm->parsed()) {
    bool ok = dm_condition(d, g_arg);
    long long a = d - g_arg + 1, b = 2 * g_arg - 2;
    long long gcd = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
    std::cout << (ok ? "true" : "false") << " (gcd=" << gcd << ")\n";
    return 0;
  }
  if (c_info->parsed()) {
    GraphDocument doc = load(file);
    long long gen = total_genus(doc.graph);
    std::cout << "g=" << gen << " n=" << doc.graph.num_markings();
    if (gen >= 3) std::cout << " dim=" << stack_dimension(gen, doc.graph.num_markings());
    std::cout << "\n";
    return 0;
  }
  if (c_dot->parsed()) {
    std::cout << export_dot(load(file).graph);
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
