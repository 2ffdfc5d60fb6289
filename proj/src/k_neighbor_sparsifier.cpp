#include <atomic>
#include <vector>

#include "gsparse/rng.hpp"
#include "gsparse/sparsify.hpp"

namespace gsparse {

Graph k_neighbor_sparsify(const AdjacencyList& adj, std::uint32_t k, std::uint64_t seed) {
  const auto n = static_cast<std::int64_t>(adj.num_nodes());
  std::vector<std::uint8_t> keep(adj.num_edges(), 0);

#pragma omp parallel
  {
    std::vector<std::uint32_t> slots;
#pragma omp for schedule(dynamic, 1024)
    for (std::int64_t v = 0; v < n; ++v) {
      const auto i = static_cast<NodeId>(v);
      const NodeId d = adj.degree(i);
      auto mark = [&](std::size_t pos) {
        std::atomic_ref<std::uint8_t>(keep[adj.edge_id_at(i, pos)])
            .store(1, std::memory_order_relaxed);
      };
      if (d <= k) {
        for (std::size_t pos = 0; pos < d; ++pos) mark(pos);
        continue;
      }
      // First k steps of a Fisher-Yates shuffle over row positions.
      slots.resize(d);
      for (std::uint32_t p = 0; p < d; ++p) slots[p] = p;
      StreamRng rng(seed, RngDomain::kKNeighbor, i);
      for (std::uint32_t t = 0; t < k; ++t) {
        const auto r = t + static_cast<std::uint32_t>(rng.below(d - t));
        std::swap(slots[t], slots[r]);
        mark(slots[t]);
      }
    }
  }
  return adj.subgraph(keep);
}

}  // namespace gsparse
