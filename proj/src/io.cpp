#include "balgraph/io.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace balgraph {

using nlohmann::json;

GraphDocument parse_graph_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (doc.at("version").get<int>() != 1)
      throw std::invalid_argument("unsupported document version");
    std::vector<VertexData> verts;
    for (const json& jv : doc.at("vertices")) {
      VertexData v;
      v.id = jv.at("id").get<std::string>();
      v.genus = jv.at("genus").get<int>();
      if (jv.contains("legs"))
        for (const json& l : jv.at("legs")) v.legs.insert(l.get<int>());
      verts.push_back(std::move(v));
    }
    std::vector<std::pair<std::string, std::string>> edges;
    if (doc.contains("edges"))
      for (const json& je : doc.at("edges")) {
        if (!je.is_array() || je.size() != 2)
          throw std::invalid_argument("edges must be pairs of vertex ids");
        edges.emplace_back(je[0].get<std::string>(), je[1].get<std::string>());
      }
    GraphDocument out{MarkedDualGraph(std::move(verts), edges), {}};
    if (doc.contains("multidegrees"))
      for (const auto& [name, jm] : doc.at("multidegrees").items()) {
        Multidegree m(out.graph.num_vertices(), 0);
        std::vector<bool> seen(out.graph.num_vertices(), false);
        for (const auto& [id, deg] : jm.items()) {
          int i = out.graph.index_of(id);
          if (i < 0) throw std::invalid_argument("multidegree references unknown vertex " + id);
          m[i] = deg.get<long long>();
          seen[i] = true;
        }
        for (int i = 0; i < out.graph.num_vertices(); ++i)
          if (!seen[i])
            throw std::invalid_argument("multidegree \"" + name + "\" misses vertex " +
                                        out.graph.vertex(i).id);
        out.multidegrees[name] = std::move(m);
      }
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed document: ") + e.what());
  }
}

std::string serialize_graph_document(const MarkedDualGraph& g,
                                     const std::map<std::string, Multidegree>& multidegrees) {
  json doc;
  doc["version"] = 1;
  doc["vertices"] = json::array();
  for (const VertexData& v : g.vertices()) {
    json jv;
    jv["id"] = v.id;
    jv["genus"] = v.genus;
    jv["legs"] = json::array();
    for (int l : v.legs) jv["legs"].push_back(l);
    doc["vertices"].push_back(std::move(jv));
  }
  doc["edges"] = json::array();
  for (const Edge& e : g.edges())
    doc["edges"].push_back(json::array({g.vertex(e.u).id, g.vertex(e.v).id}));
  doc["multidegrees"] = json::object();
  for (const auto& [name, m] : multidegrees) {
    json jm = json::object();
    for (int i = 0; i < g.num_vertices(); ++i) jm[g.vertex(i).id] = m[i];
    doc["multidegrees"][name] = std::move(jm);
  }
  return doc.dump(2) + "\n";
}

std::string export_dot(const MarkedDualGraph& g) {
  std::ostringstream os;
  os << "graph curve {\n  node [shape=circle];\n";
  for (int i = 0; i < g.num_vertices(); ++i) {
    const VertexData& v = g.vertex(i);
    bool exceptional = v.genus == 0 && !g.has_loop_at(i) && g.endpoints_at(i) == 2 &&
                       v.legs.empty();
    os << "  \"" << v.id << "\" [label=\"" << v.id << "\\ng=" << v.genus << "\"";
    if (exceptional) os << ", shape=diamond";
    os << "];\n";
  }
  for (const Edge& e : g.edges())
    os << "  \"" << g.vertex(e.u).id << "\" -- \"" << g.vertex(e.v).id << "\";\n";
  for (const VertexData& v : g.vertices())
    for (int l : v.legs) {
      os << "  \"leg" << l << "\" [shape=plaintext, label=\"" << l << "\"];\n";
      os << "  \"" << v.id << "\" -- \"leg" << l << "\" [style=dashed];\n";
    }
  os << "}\n";
  return os.str();
}

Multidegree parse_multidegree(const MarkedDualGraph& g, const std::string& text) {
  Multidegree m(g.num_vertices(), 0);
  std::vector<bool> seen(g.num_vertices(), false);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("expected id=deg, got \"" + item + "\"");
    std::string id = item.substr(0, eq);
    int i = g.index_of(id);
    if (i < 0) throw std::invalid_argument("unknown vertex " + id);
    if (seen[i]) throw std::invalid_argument("duplicate vertex " + id);
    try {
      m[i] = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer in \"" + item + "\"");
    }
    seen[i] = true;
  }
  for (int i = 0; i < g.num_vertices(); ++i)
    if (!seen[i]) throw std::invalid_argument("missing degree for vertex " + g.vertex(i).id);
  return m;
}

std::string format_multidegree(const MarkedDualGraph& g, const Multidegree& mdeg) {
  std::string out;
  for (int i = 0; i < g.num_vertices(); ++i) {
    if (i) out += ",";
    out += g.vertex(i).id + "=" + std::to_string(mdeg[i]);
  }
  return out;
}

}  // namespace balgraph
