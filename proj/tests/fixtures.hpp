#pragma once

#include "balgraph/graph.hpp"

namespace balgraph::fixtures {

/// Two genus-1 components joined by two parallel edges (g = 3).
inline MarkedDualGraph g2() {
  return MarkedDualGraph({{"A", 1, {}}, {"B", 1, {}}}, {{"A", "B"}, {"A", "B"}});
}

/// g2 with one edge blown up: A - E - B plus the direct edge A-B; E is the
/// unique exceptional vertex.  Vertex order: A, B, E.
inline MarkedDualGraph g3() {
  return MarkedDualGraph({{"A", 1, {}}, {"E", 0, {}}, {"B", 1, {}}},
                         {{"A", "E"}, {"E", "B"}, {"A", "B"}});
}

/// A genus-3 component with a two-marked rational tail.  Vertex order: E, v0.
inline MarkedDualGraph g4() {
  return MarkedDualGraph({{"v0", 3, {}}, {"E", 0, {1, 2}}}, {{"v0", "E"}});
}

/// Single genus-3 vertex, optionally with markings 1..n.
inline MarkedDualGraph one_vertex(int n = 0) {
  std::set<int> legs;
  for (int l = 1; l <= n; ++l) legs.insert(l);
  return MarkedDualGraph({{"A", 3, legs}}, {});
}

}  // namespace balgraph::fixtures
