#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "gsparse/graph.hpp"

namespace gsparse::detail {

// Higher original degree first, then lower node id.
inline bool ranks_before(const DegreeIndex& deg, NodeId a, NodeId b) noexcept {
  const NodeId da = deg.degree_of(a);
  const NodeId db = deg.degree_of(b);
  return da != db ? da > db : a < b;
}

// Positions (within `row`) of the `k` best-ranked neighbors, best first.
inline void top_ranked_positions(std::span<const NodeId> row, const DegreeIndex& deg,
                                 std::size_t k, std::vector<std::uint32_t>& positions) {
  positions.resize(row.size());
  for (std::uint32_t p = 0; p < row.size(); ++p) positions[p] = p;
  k = std::min(k, row.size());
  std::partial_sort(positions.begin(), positions.begin() + static_cast<std::ptrdiff_t>(k),
                    positions.end(), [&](std::uint32_t a, std::uint32_t b) {
                      return ranks_before(deg, row[a], row[b]);
                    });
  positions.resize(k);
}

// max(1, floor(d^alpha)), capped at d; 0 for isolated vertices.
inline std::size_t local_degree_quota(NodeId degree, double alpha) noexcept {
  if (degree == 0) return 0;
  const double quota = std::floor(std::pow(static_cast<double>(degree), alpha));
  return std::min<std::size_t>(degree, std::max<std::size_t>(1, static_cast<std::size_t>(quota)));
}

// max(1, floor(rho * d)), capped at d; 0 for isolated vertices.
inline std::size_t rank_degree_quota(NodeId degree, double rho) noexcept {
  if (degree == 0) return 0;
  const double quota = std::floor(rho * static_cast<double>(degree));
  return std::min<std::size_t>(degree, std::max<std::size_t>(1, static_cast<std::size_t>(quota)));
}

}  // namespace gsparse::detail
