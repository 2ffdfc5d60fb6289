#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace gsparse {

using NodeId = std::uint32_t;
using EdgeId = std::uint64_t;

/// Largest node count representable; ids are in [0, kMaxNodes).
inline constexpr std::uint64_t kMaxNodes = std::numeric_limits<NodeId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph stored as a canonical edge list: each edge once as
/// (u, v) with u < v, sorted lexicographically, no duplicates, no self-loops.
/// Nodes without incident edges are allowed.
class Graph {
 public:
  Graph() = default;
  explicit Graph(NodeId num_nodes) : num_nodes_(num_nodes) {}

  /// Adopts `edges` if they are already canonical and in range; throws a
  /// kFormat error otherwise.
  static Graph from_canonical(NodeId num_nodes, std::vector<Edge> edges);

  NodeId num_nodes() const noexcept { return num_nodes_; }
  EdgeId num_edges() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  struct Trusted {};
  Graph(Trusted, NodeId num_nodes, std::vector<Edge> edges)
      : num_nodes_(num_nodes), edges_(std::move(edges)) {}

  friend struct GraphBuilderAccess;

  NodeId num_nodes_ = 0;
  std::vector<Edge> edges_;
};

struct CanonicalizeStats {
  EdgeId raw_edges = 0;
  EdgeId self_loops_dropped = 0;
  EdgeId duplicates_collapsed = 0;

  friend bool operator==(const CanonicalizeStats&, const CanonicalizeStats&) = default;
};

struct Canonicalized {
  Graph graph;
  CanonicalizeStats stats;
};

/// Orients every pair as (min, max), drops self-loops, collapses duplicates
/// and sorts. Throws kOutOfRange naming the first offending pair.
Canonicalized canonicalize(std::span<const Edge> raw_edges, NodeId num_nodes);

/// Paired-array form of `canonicalize`; arrays must have equal length.
Canonicalized canonicalize(std::span<const NodeId> src, std::span<const NodeId> dst,
                           NodeId num_nodes);

/// Symmetric CSR view of a Graph. Every row is strictly increasing. Each slot
/// maps back to the index of its canonical edge in the source Graph.
class AdjacencyList {
 public:
  AdjacencyList() = default;

  NodeId num_nodes() const noexcept { return static_cast<NodeId>(offsets_.size() - 1); }
  /// Number of undirected edges; the CSR holds twice as many slots.
  EdgeId num_edges() const noexcept { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId i) const noexcept {
    return {targets_.data() + offsets_[i], targets_.data() + offsets_[i + 1]};
  }
  NodeId degree(NodeId i) const noexcept {
    return static_cast<NodeId>(offsets_[i + 1] - offsets_[i]);
  }

  /// Index of edge {a, b} in the source Graph's edge list, or kNoEdge.
  EdgeId edge_id(NodeId a, NodeId b) const noexcept;

  /// Index of the edge stored at position `pos` of row `i`.
  EdgeId edge_id_at(NodeId i, std::size_t pos) const noexcept;

  /// Canonical edge with the given index.
  Edge edge(EdgeId id) const noexcept;

  /// The subgraph keeping exactly the edges whose `keep[id]` is nonzero.
  Graph subgraph(std::span<const std::uint8_t> keep) const;

  /// All 2|E| directed entries (i, j), row by row.
  std::vector<Edge> directed_entries() const;

 private:
  friend AdjacencyList to_adjacency(const class Graph& g);

  NodeId lower_count(NodeId i) const noexcept {
    return degree(i) - static_cast<NodeId>(upper_offsets_[i + 1] - upper_offsets_[i]);
  }

  std::vector<EdgeId> offsets_{0};
  std::vector<NodeId> targets_;
  // upper_offsets_[i] = number of canonical edges (u, v) with u < i.
  std::vector<EdgeId> upper_offsets_{0};
};

AdjacencyList to_adjacency(const Graph& g);

/// Degrees of the original graph, frozen for the duration of a run.
class DegreeIndex {
 public:
  DegreeIndex() = default;
  explicit DegreeIndex(std::vector<NodeId> degrees) : degrees_(std::move(degrees)) {}

  NodeId degree_of(NodeId i) const noexcept { return degrees_[i]; }
  std::span<const NodeId> degrees() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return degrees_.size(); }

 private:
  std::vector<NodeId> degrees_;
};

DegreeIndex degree_index(const AdjacencyList& adj);

/// Number of nodes incident to at least one edge.
NodeId covered_nodes(const Graph& g);

}  // namespace gsparse
