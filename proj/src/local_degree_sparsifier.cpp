#include <atomic>
#include <vector>

#include "gsparse/sparsify.hpp"
#include "ranking.hpp"

namespace gsparse {

Graph local_degree_sparsify(const AdjacencyList& adj, const DegreeIndex& deg, double alpha) {
  const auto n = static_cast<std::int64_t>(adj.num_nodes());
  std::vector<std::uint8_t> keep(adj.num_edges(), 0);

#pragma omp parallel
  {
    std::vector<std::uint32_t> top;
#pragma omp for schedule(dynamic, 1024)
    for (std::int64_t v = 0; v < n; ++v) {
      const auto i = static_cast<NodeId>(v);
      const std::size_t quota = detail::local_degree_quota(adj.degree(i), alpha);
      if (quota == 0) continue;
      detail::top_ranked_positions(adj.neighbors(i), deg, quota, top);
      for (const std::uint32_t pos : top) {
        std::atomic_ref<std::uint8_t>(keep[adj.edge_id_at(i, pos)])
            .store(1, std::memory_order_relaxed);
      }
    }
  }
  return adj.subgraph(keep);
}

}  // namespace gsparse
