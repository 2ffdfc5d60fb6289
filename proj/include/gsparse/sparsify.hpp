#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "gsparse/graph.hpp"
#include "gsparse/seeds.hpp"
#include "gsparse/timing.hpp"

namespace gsparse {

enum class Method { kRandom, kKNeighbor, kRankDegree, kLocalDegree };

/// Registry entry for a sparsification method. New methods add an entry here
/// and a case in `summarize_graph`.
struct MethodInfo {
  Method method;
  std::string_view name;  // CLI / config spelling, e.g. "k-neighbor"
  bool needs_adjacency;
  std::string_view summary;
};

std::span<const MethodInfo> method_registry();
const MethodInfo& method_info(Method method);
/// Throws kValidation for unknown names.
Method parse_method(std::string_view name);

/// Parameter bundle for `summarize_graph`. Only the fields of `method` are
/// consulted. Defaults are the standard operating point of each method.
struct SparsifierConfig {
  Method method = Method::kRandom;

  // Random: fraction of edges removed; exactly round((1 - r)|E|) are kept
  // unless `bernoulli` asks for independent per-edge coin flips.
  double removal_ratio = 0.30;
  bool bernoulli = false;

  // K-Neighbor
  std::uint32_t k = 5;

  // Rank Degree
  double rho = 0.50;
  double target_node_fraction = 0.25;
  SeedNodeSet seeds;
  // When `seeds` is empty, start from this many uniformly drawn nodes.
  // Zero disables random seeding.
  std::uint64_t random_seed_count = 0;
  // Hop limit; zero selects default_max_hops(num_nodes).
  std::uint32_t max_hops = 0;

  // Local Degree
  double alpha = 0.5;

  std::uint64_t seed = 0;

  friend bool operator==(const SparsifierConfig&, const SparsifierConfig&) = default;
};

/// 10 * ceil(log2(num_nodes) + 1).
std::uint32_t default_max_hops(NodeId num_nodes);

/// Throws kValidation describing the first invalid field of `cfg.method`.
void validate(const SparsifierConfig& cfg, NodeId num_nodes);

/// Rank Degree execution trace; all zero for the other methods.
struct RankDegreeTrace {
  std::uint32_t hops = 0;
  std::uint32_t fallback_reseeds = 0;
  bool truncated = false;  // hop limit reached before the target size

  friend bool operator==(const RankDegreeTrace&, const RankDegreeTrace&) = default;
};

struct SparsificationResult {
  Graph graph;
  double edge_reduction_pct = 0.0;
  NodeId node_coverage = 0;
  TimingBreakdown timing;
  SparsifierConfig config;
  RankDegreeTrace trace;
};

/// Unified entry point. `adj` must be the adjacency of `g`.
SparsificationResult summarize_graph(const Graph& g, const AdjacencyList& adj,
                                     const SparsifierConfig& cfg);

/// Builds the adjacency only if the method needs it, attributing the cost to
/// the edge_to_adjacency phase.
SparsificationResult summarize_graph(const Graph& g, const SparsifierConfig& cfg);

/// Same as above, recording phases into a caller-owned timer so that the
/// caller can embed the run in a larger pipeline.
SparsificationResult summarize_graph(const Graph& g, const SparsifierConfig& cfg,
                                     PhaseTimer& timer);

// ---------------------------------------------------------------------------
// Individual sparsifiers. All are deterministic in their inputs and produce
// the same output for any number of worker threads.

/// Keeps round((1 - removal_ratio)|E|) edges chosen uniformly without
/// replacement, or with `bernoulli` each edge independently with
/// probability 1 - removal_ratio.
Graph random_sparsify(const Graph& g, double removal_ratio, std::uint64_t seed,
                      bool bernoulli = false);

/// Each vertex marks all its edges when d_i <= k, otherwise a uniform k-subset;
/// an edge survives if either endpoint marked it.
Graph k_neighbor_sparsify(const AdjacencyList& adj, std::uint32_t k, std::uint64_t seed);

struct RankDegreeParams {
  std::span<const NodeId> seeds;
  double rho = 0.5;
  double target_node_fraction = 0.25;
  std::uint64_t random_seed_count = 0;
  std::uint32_t max_hops = 0;
  std::uint64_t seed = 0;
};

struct RankDegreeOutput {
  Graph graph;
  RankDegreeTrace trace;
};

/// Hop-parallel Rank Degree expansion from `params.seeds`.
RankDegreeOutput rank_degree_sparsify(const AdjacencyList& adj, const DegreeIndex& deg,
                                      const RankDegreeParams& params);

/// Each vertex keeps edges to its max(1, floor(d_i^alpha)) highest-degree
/// neighbors; an edge survives if either endpoint keeps it.
Graph local_degree_sparsify(const AdjacencyList& adj, const DegreeIndex& deg, double alpha);

/// 100 * (1 - kept/total), or 0 when total is 0.
double edge_reduction_pct(EdgeId total, EdgeId kept);

}  // namespace gsparse
