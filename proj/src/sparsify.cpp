#include "gsparse/sparsify.hpp"

#include <array>
#include <cmath>
#include <string>

#include "gsparse/error.hpp"

namespace gsparse {

namespace {

constexpr std::array<MethodInfo, 4> kRegistry{{
    {Method::kRandom, "random", false, "keep a uniform random subset of edges"},
    {Method::kKNeighbor, "k-neighbor", true, "each vertex keeps up to k random incident edges"},
    {Method::kRankDegree, "rank-degree", true,
     "hop-wise expansion along the top-ranked neighbors by degree"},
    {Method::kLocalDegree, "local-degree", true,
     "each vertex keeps edges to its d^alpha highest-degree neighbors"},
}};

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorKind::kValidation, message);
}

}  // namespace

std::span<const MethodInfo> method_registry() { return kRegistry; }

const MethodInfo& method_info(Method method) {
  for (const auto& info : kRegistry) {
    if (info.method == method) return info;
  }
  invalid("unregistered method");
}

Method parse_method(std::string_view name) {
  for (const auto& info : kRegistry) {
    if (info.name == name) return info.method;
  }
  invalid("unknown method '" + std::string(name) +
          "' (expected random, k-neighbor, rank-degree or local-degree)");
}

std::uint32_t default_max_hops(NodeId num_nodes) {
  const double log = num_nodes > 0 ? std::log2(static_cast<double>(num_nodes)) : 0.0;
  return 10 * static_cast<std::uint32_t>(std::ceil(log + 1.0));
}

void validate(const SparsifierConfig& cfg, NodeId num_nodes) {
  switch (cfg.method) {
    case Method::kRandom:
      if (!(cfg.removal_ratio >= 0.0 && cfg.removal_ratio < 1.0)) {
        invalid("removal_ratio must be in [0, 1), got " + std::to_string(cfg.removal_ratio));
      }
      return;
    case Method::kKNeighbor:
      if (cfg.k < 1) invalid("k must be a positive integer");
      return;
    case Method::kRankDegree: {
      if (!(cfg.rho > 0.0 && cfg.rho <= 1.0)) {
        invalid("rho must be in (0, 1], got " + std::to_string(cfg.rho));
      }
      if (!(cfg.target_node_fraction > 0.0 && cfg.target_node_fraction <= 1.0)) {
        invalid("target_node_fraction must be in (0, 1], got " +
                std::to_string(cfg.target_node_fraction));
      }
      if (num_nodes == 0) invalid("rank-degree needs a graph with at least one node");
      if (cfg.seeds.empty() && cfg.random_seed_count == 0) {
        invalid("rank-degree needs seed nodes or a random seed count");
      }
      if (cfg.seeds.empty() && cfg.random_seed_count > num_nodes) {
        invalid("random seed count " + std::to_string(cfg.random_seed_count) +
                " exceeds num_nodes=" + std::to_string(num_nodes));
      }
      const auto ids = cfg.seeds.ids();
      if (!ids.empty() && ids.back() >= num_nodes) {
        throw Error(ErrorKind::kOutOfRange, "seed node " + std::to_string(ids.back()) +
                                                " >= num_nodes=" + std::to_string(num_nodes));
      }
      return;
    }
    case Method::kLocalDegree:
      if (!(cfg.alpha >= 0.0 && cfg.alpha <= 1.0)) {
        invalid("alpha must be in [0, 1], got " + std::to_string(cfg.alpha));
      }
      return;
  }
  invalid("unregistered method");
}

double edge_reduction_pct(EdgeId total, EdgeId kept) {
  if (total == 0) return 0.0;
  return 100.0 * (1.0 - static_cast<double>(kept) / static_cast<double>(total));
}

namespace {

SparsificationResult dispatch(const Graph& g, const AdjacencyList* adj,
                              const SparsifierConfig& cfg, PhaseTimer& timer) {
  SparsificationResult result;
  result.config = cfg;

  timer.start(Phase::kSparsification);
  switch (cfg.method) {
    case Method::kRandom:
      result.graph = random_sparsify(g, cfg.removal_ratio, cfg.seed, cfg.bernoulli);
      break;
    case Method::kKNeighbor:
      result.graph = k_neighbor_sparsify(*adj, cfg.k, cfg.seed);
      break;
    case Method::kRankDegree: {
      const DegreeIndex deg = degree_index(*adj);
      RankDegreeParams params;
      params.seeds = cfg.seeds.ids();
      params.rho = cfg.rho;
      params.target_node_fraction = cfg.target_node_fraction;
      params.random_seed_count = cfg.random_seed_count;
      params.max_hops = cfg.max_hops;
      params.seed = cfg.seed;
      auto out = rank_degree_sparsify(*adj, deg, params);
      result.graph = std::move(out.graph);
      result.trace = out.trace;
      break;
    }
    case Method::kLocalDegree: {
      const DegreeIndex deg = degree_index(*adj);
      result.graph = local_degree_sparsify(*adj, deg, cfg.alpha);
      break;
    }
  }
  timer.stop();

  result.edge_reduction_pct = edge_reduction_pct(g.num_edges(), result.graph.num_edges());
  result.node_coverage = covered_nodes(result.graph);
  return result;
}

void check_adjacency(const Graph& g, const AdjacencyList& adj) {
  if (adj.num_nodes() != g.num_nodes() || adj.num_edges() != g.num_edges()) {
    invalid("adjacency list was not derived from the given graph");
  }
}

}  // namespace

SparsificationResult summarize_graph(const Graph& g, const AdjacencyList& adj,
                                     const SparsifierConfig& cfg) {
  validate(cfg, g.num_nodes());
  check_adjacency(g, adj);
  PhaseTimer timer;
  auto result = dispatch(g, &adj, cfg, timer);
  result.timing = timer.finish();
  return result;
}

SparsificationResult summarize_graph(const Graph& g, const SparsifierConfig& cfg,
                                     PhaseTimer& timer) {
  validate(cfg, g.num_nodes());
  if (!method_info(cfg.method).needs_adjacency) {
    auto result = dispatch(g, nullptr, cfg, timer);
    result.timing = timer.finish();
    return result;
  }
  const AdjacencyList adj = timer.measure(Phase::kEdgeToAdjacency, [&] { return to_adjacency(g); });
  auto result = dispatch(g, &adj, cfg, timer);
  result.timing = timer.finish();
  return result;
}

SparsificationResult summarize_graph(const Graph& g, const SparsifierConfig& cfg) {
  PhaseTimer timer;
  return summarize_graph(g, cfg, timer);
}

}  // namespace gsparse
