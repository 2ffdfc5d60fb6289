#pragma once

#include "gsparse/graph.hpp"

namespace gsparse {

// Library-internal construction of Graphs whose edges are canonical by
// construction (sparsifier output, adjacency compaction).
struct GraphBuilderAccess {
  static Graph trusted(NodeId num_nodes, std::vector<Edge> edges) {
    return Graph(Graph::Trusted{}, num_nodes, std::move(edges));
  }
};

}  // namespace gsparse
