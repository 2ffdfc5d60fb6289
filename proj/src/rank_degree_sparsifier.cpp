#include <algorithm>
#include <cmath>
#include <unordered_set>
#include <vector>

#include <omp.h>

#include "gsparse/rng.hpp"
#include "gsparse/sparsify.hpp"
#include "ranking.hpp"

namespace gsparse {

namespace {

struct Selection {
  EdgeId edge;
  NodeId from;
  NodeId to;
};

std::uint64_t frontier_hash(std::span<const NodeId> frontier) {
  std::uint64_t h = mix64(frontier.size());
  for (const NodeId v : frontier) h = mix64(h ^ v);
  return h;
}

std::vector<NodeId> random_frontier(NodeId n, std::uint64_t count, std::uint64_t seed,
                                    RngDomain domain, std::uint64_t index) {
  StreamRng rng(seed, domain, index);
  const auto drawn = sample_distinct(n, std::min<std::uint64_t>(count, n), rng);
  return {drawn.begin(), drawn.end()};
}

}  // namespace

RankDegreeOutput rank_degree_sparsify(const AdjacencyList& adj, const DegreeIndex& deg,
                                      const RankDegreeParams& params) {
  const NodeId n = adj.num_nodes();
  const auto target = static_cast<NodeId>(
      std::min<double>(n, std::ceil(params.target_node_fraction * static_cast<double>(n))));
  const std::uint32_t max_hops = params.max_hops > 0 ? params.max_hops : default_max_hops(n);

  std::vector<NodeId> frontier(params.seeds.begin(), params.seeds.end());
  if (frontier.empty()) {
    frontier = random_frontier(n, params.random_seed_count, params.seed,
                               RngDomain::kRankDegreeInitialSeeds, 0);
  }
  const std::uint64_t reseed_size = frontier.size();

  std::vector<std::uint8_t> selected(adj.num_edges(), 0);
  std::vector<std::uint8_t> covered(n, 0);
  NodeId coverage = 0;

  // A frontier that repeats since the last re-seed would repeat forever, so it
  // counts as exhausted just like an empty one.
  std::unordered_set<std::uint64_t> seen{frontier_hash(frontier)};

  RankDegreeTrace trace;
  const int workers = omp_get_max_threads();
  std::vector<std::vector<Selection>> picks(workers);

  while (coverage < target && trace.hops < max_hops) {
    ++trace.hops;
    for (auto& p : picks) p.clear();

#pragma omp parallel num_threads(workers)
    {
      auto& mine = picks[omp_get_thread_num()];
      std::vector<std::uint32_t> top;
#pragma omp for schedule(dynamic, 64)
      for (std::int64_t s = 0; s < static_cast<std::int64_t>(frontier.size()); ++s) {
        const NodeId i = frontier[s];
        const std::size_t quota = detail::rank_degree_quota(adj.degree(i), params.rho);
        if (quota == 0) continue;
        const auto row = adj.neighbors(i);
        detail::top_ranked_positions(row, deg, quota, top);
        for (const std::uint32_t pos : top) mine.push_back({adj.edge_id_at(i, pos), i, row[pos]});
      }
    }

    std::vector<NodeId> next;
    for (const auto& p : picks) {
      for (const Selection& sel : p) {
        next.push_back(sel.to);
        if (selected[sel.edge]) continue;
        selected[sel.edge] = 1;
        for (const NodeId v : {sel.from, sel.to}) {
          coverage += covered[v] == 0;
          covered[v] = 1;
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());

    if (next.empty() || !seen.insert(frontier_hash(next)).second) {
      next = random_frontier(n, reseed_size, params.seed, RngDomain::kRankDegreeFallback,
                             trace.fallback_reseeds++);
      seen.clear();
      seen.insert(frontier_hash(next));
    }
    frontier = std::move(next);
  }

  trace.truncated = coverage < target;
  return {adj.subgraph(selected), trace};
}

}  // namespace gsparse
