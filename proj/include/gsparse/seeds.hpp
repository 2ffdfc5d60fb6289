#pragma once

#include <span>
#include <vector>

#include "gsparse/graph.hpp"

namespace gsparse {

/// Sorted, duplicate-free set of node ids used as the initial Rank Degree
/// frontier.
class SeedNodeSet {
 public:
  SeedNodeSet() = default;

  /// Sorts and deduplicates; throws kOutOfRange for ids >= num_nodes.
  static SeedNodeSet from_ids(std::vector<NodeId> ids, NodeId num_nodes);

  std::span<const NodeId> ids() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }

  /// Order-sensitive hash of the ids, echoed in reports in place of the list.
  std::uint64_t digest() const noexcept;

  friend bool operator==(const SeedNodeSet&, const SeedNodeSet&) = default;

 private:
  std::vector<NodeId> ids_;
};

}  // namespace gsparse
