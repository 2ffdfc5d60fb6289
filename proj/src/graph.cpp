#include "gsparse/graph.hpp"

#include <algorithm>
#include <parallel/algorithm>
#include <string>

#include "graph_access.hpp"
#include "gsparse/error.hpp"

namespace gsparse {

std::string_view error_class(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kOutOfRange: return "OutOfRangeError";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kFormat: return "FormatError";
    case ErrorKind::kCapacity: return "CapacityError";
    case ErrorKind::kValidation: return "ValidationError";
    case ErrorKind::kIo: return "IoError";
  }
  return "Error";
}

namespace {

bool is_canonical(std::span<const Edge> edges, NodeId num_nodes) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u >= e.v || e.v >= num_nodes) return false;
    if (i > 0 && !(edges[i - 1] < e)) return false;
  }
  return true;
}

[[noreturn]] void throw_out_of_range(std::size_t index, NodeId u, NodeId v, NodeId num_nodes) {
  throw Error(ErrorKind::kOutOfRange,
              "edge #" + std::to_string(index) + " (" + std::to_string(u) + ", " +
                  std::to_string(v) + ") references a node id >= num_nodes=" +
                  std::to_string(num_nodes));
}

Canonicalized finish(std::vector<Edge> oriented, EdgeId raw, NodeId num_nodes) {
  __gnu_parallel::sort(oriented.begin(), oriented.end());
  const auto last = std::unique(oriented.begin(), oriented.end());
  Canonicalized out;
  out.stats.raw_edges = raw;
  out.stats.self_loops_dropped = raw - oriented.size();
  out.stats.duplicates_collapsed = static_cast<EdgeId>(oriented.end() - last);
  oriented.erase(last, oriented.end());
  oriented.shrink_to_fit();
  out.graph = GraphBuilderAccess::trusted(num_nodes, std::move(oriented));
  return out;
}

}  // namespace

Graph Graph::from_canonical(NodeId num_nodes, std::vector<Edge> edges) {
  if (!is_canonical(edges, num_nodes)) {
    throw Error(ErrorKind::kFormat, "edge list is not in canonical form for num_nodes=" +
                                        std::to_string(num_nodes));
  }
  return Graph(Trusted{}, num_nodes, std::move(edges));
}

Canonicalized canonicalize(std::span<const Edge> raw_edges, NodeId num_nodes) {
  std::vector<Edge> oriented;
  oriented.reserve(raw_edges.size());
  for (std::size_t i = 0; i < raw_edges.size(); ++i) {
    const auto [u, v] = raw_edges[i];
    if (u >= num_nodes || v >= num_nodes) throw_out_of_range(i, u, v, num_nodes);
    if (u == v) continue;
    oriented.push_back(u < v ? Edge{u, v} : Edge{v, u});
  }
  return finish(std::move(oriented), raw_edges.size(), num_nodes);
}

Canonicalized canonicalize(std::span<const NodeId> src, std::span<const NodeId> dst,
                           NodeId num_nodes) {
  if (src.size() != dst.size()) {
    throw Error(ErrorKind::kFormat, "source and destination arrays differ in length (" +
                                        std::to_string(src.size()) + " vs " +
                                        std::to_string(dst.size()) + ")");
  }
  std::vector<Edge> oriented;
  oriented.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    const NodeId u = src[i];
    const NodeId v = dst[i];
    if (u >= num_nodes || v >= num_nodes) throw_out_of_range(i, u, v, num_nodes);
    if (u == v) continue;
    oriented.push_back(u < v ? Edge{u, v} : Edge{v, u});
  }
  return finish(std::move(oriented), src.size(), num_nodes);
}

AdjacencyList to_adjacency(const Graph& g) {
  const NodeId n = g.num_nodes();
  const auto edges = g.edges();

  AdjacencyList adj;
  std::vector<EdgeId> degree(n, 0);
  std::vector<EdgeId> upper(n, 0);
  for (const Edge& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
    ++upper[e.u];
  }

  adj.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  adj.upper_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId i = 0; i < n; ++i) {
    adj.offsets_[i + 1] = adj.offsets_[i] + degree[i];
    adj.upper_offsets_[i + 1] = adj.upper_offsets_[i] + upper[i];
  }
  adj.targets_.resize(2 * edges.size());

  // Row i = neighbors below i (ascending, since edges are sorted by u) followed
  // by the contiguous run of canonical edges (i, v).
  std::vector<EdgeId> cursor(adj.offsets_.begin(), adj.offsets_.end() - 1);
  for (const Edge& e : edges) adj.targets_[cursor[e.v]++] = e.u;

#pragma omp parallel for schedule(dynamic, 4096)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    const auto row = static_cast<NodeId>(i);
    EdgeId slot = adj.offsets_[row + 1] - upper[row];
    for (EdgeId e = adj.upper_offsets_[row]; e < adj.upper_offsets_[row + 1]; ++e) {
      adj.targets_[slot++] = edges[e].v;
    }
  }
  return adj;
}

EdgeId AdjacencyList::edge_id(NodeId a, NodeId b) const noexcept {
  if (a == b || a >= num_nodes() || b >= num_nodes()) return kNoEdge;
  const NodeId u = std::min(a, b);
  const NodeId v = std::max(a, b);
  const auto row = neighbors(u);
  const auto upper_begin = row.begin() + lower_count(u);
  const auto it = std::lower_bound(upper_begin, row.end(), v);
  if (it == row.end() || *it != v) return kNoEdge;
  return upper_offsets_[u] + static_cast<EdgeId>(it - upper_begin);
}

EdgeId AdjacencyList::edge_id_at(NodeId i, std::size_t pos) const noexcept {
  const NodeId lower = lower_count(i);
  if (pos >= lower) return upper_offsets_[i] + (pos - lower);
  return edge_id(i, neighbors(i)[pos]);
}

Edge AdjacencyList::edge(EdgeId id) const noexcept {
  // Row owning the edge: last u with upper_offsets_[u] <= id.
  const auto it = std::upper_bound(upper_offsets_.begin(), upper_offsets_.end(), id);
  const auto u = static_cast<NodeId>(it - upper_offsets_.begin() - 1);
  const EdgeId slot = offsets_[u] + lower_count(u) + (id - upper_offsets_[u]);
  return {u, targets_[slot]};
}

Graph AdjacencyList::subgraph(std::span<const std::uint8_t> keep) const {
  const NodeId n = num_nodes();
  std::vector<EdgeId> kept_before(static_cast<std::size_t>(n) + 1, 0);

#pragma omp parallel for schedule(dynamic, 4096)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    EdgeId count = 0;
    for (EdgeId e = upper_offsets_[i]; e < upper_offsets_[i + 1]; ++e) count += keep[e] != 0;
    kept_before[i + 1] = count;
  }
  for (NodeId i = 0; i < n; ++i) kept_before[i + 1] += kept_before[i];

  std::vector<Edge> out(kept_before[n]);
#pragma omp parallel for schedule(dynamic, 4096)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    const auto u = static_cast<NodeId>(i);
    EdgeId write = kept_before[u];
    EdgeId slot = offsets_[u] + lower_count(u);
    for (EdgeId e = upper_offsets_[u]; e < upper_offsets_[u + 1]; ++e, ++slot) {
      if (keep[e] != 0) out[write++] = Edge{u, targets_[slot]};
    }
  }
  return GraphBuilderAccess::trusted(n, std::move(out));
}

std::vector<Edge> AdjacencyList::directed_entries() const {
  std::vector<Edge> out;
  out.reserve(targets_.size());
  for (NodeId i = 0; i < num_nodes(); ++i) {
    for (const NodeId j : neighbors(i)) out.push_back({i, j});
  }
  return out;
}

DegreeIndex degree_index(const AdjacencyList& adj) {
  std::vector<NodeId> degrees(adj.num_nodes());
  for (NodeId i = 0; i < adj.num_nodes(); ++i) degrees[i] = adj.degree(i);
  return DegreeIndex(std::move(degrees));
}

NodeId covered_nodes(const Graph& g) {
  std::vector<std::uint8_t> seen(g.num_nodes(), 0);
  NodeId count = 0;
  for (const Edge& e : g.edges()) {
    count += seen[e.u] == 0;
    seen[e.u] = 1;
    count += seen[e.v] == 0;
    seen[e.v] = 1;
  }
  return count;
}

}  // namespace gsparse
