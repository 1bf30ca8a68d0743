#pragma once

#include "balgraph/graph.hpp"

namespace balgraph {

/// On-disk form of a graph plus optional named multidegrees (schema
/// version 1).  Parsing and serialization round-trip losslessly.
struct GraphDocument {
  MarkedDualGraph graph;
  std::map<std::string, Multidegree> multidegrees;  // aligned with graph vertex order
};

/// Throws std::invalid_argument on malformed documents.
GraphDocument parse_graph_document(const std::string& text);

std::string serialize_graph_document(const MarkedDualGraph& g,
                                     const std::map<std::string, Multidegree>& multidegrees);

/// Graphviz rendering: genus as vertex label, legs as stubs, exceptional
/// vertices drawn as diamonds.
std::string export_dot(const MarkedDualGraph& g);

/// Parses "id=deg,id=deg,..." into a multidegree covering every vertex.
/// Throws std::invalid_argument on unknown/missing/duplicate ids.
Multidegree parse_multidegree(const MarkedDualGraph& g, const std::string& text);

/// Renders a multidegree as "id=deg,..." in vertex order.
std::string format_multidegree(const MarkedDualGraph& g, const Multidegree& mdeg);

}  // namespace balgraph
