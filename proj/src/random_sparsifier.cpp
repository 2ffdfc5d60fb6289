#include <algorithm>
#include <cmath>
#include <vector>

#include <omp.h>

#include "graph_access.hpp"
#include "gsparse/rng.hpp"
#include "gsparse/sparsify.hpp"

namespace gsparse {

namespace {

constexpr int kBucketBits = 16;
constexpr std::size_t kBuckets = std::size_t{1} << kBucketBits;

std::uint64_t edge_key(std::uint64_t seed, EdgeId e) {
  return stream_key(seed, RngDomain::kRandomEdgeKey, e);
}

std::size_t bucket_of(std::uint64_t key) { return key >> (64 - kBucketBits); }

// Keeps the `keep` edges with the smallest (key, index) pairs. Each edge's key
// depends only on (seed, index), so the kept set is independent of the
// schedule. The cut is found with a bucket histogram over the key's top bits
// followed by an exact sort of the single boundary bucket.
Graph exact_count(const Graph& g, EdgeId keep, std::uint64_t seed) {
  const auto edges = g.edges();
  const auto m = static_cast<std::int64_t>(edges.size());
  if (keep == 0) return Graph(g.num_nodes());
  if (keep == edges.size()) return g;

  std::vector<EdgeId> histogram(kBuckets, 0);
#pragma omp parallel
  {
    std::vector<EdgeId> local(kBuckets, 0);
#pragma omp for schedule(static)
    for (std::int64_t e = 0; e < m; ++e) ++local[bucket_of(edge_key(seed, e))];
#pragma omp critical
    for (std::size_t b = 0; b < kBuckets; ++b) histogram[b] += local[b];
  }

  std::size_t boundary = 0;
  EdgeId below = 0;
  while (below + histogram[boundary] < keep) below += histogram[boundary++];

  std::vector<std::pair<std::uint64_t, EdgeId>> candidates;
  candidates.reserve(histogram[boundary]);
  for (std::int64_t e = 0; e < m; ++e) {
    const std::uint64_t key = edge_key(seed, e);
    if (bucket_of(key) == boundary) candidates.emplace_back(key, e);
  }
  std::sort(candidates.begin(), candidates.end());
  const auto cut = candidates[keep - below - 1];

  std::vector<std::uint8_t> mask(edges.size(), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t e = 0; e < m; ++e) {
    const std::uint64_t key = edge_key(seed, e);
    mask[e] = std::pair{key, static_cast<EdgeId>(e)} <= cut;
  }

  std::vector<Edge> out;
  out.reserve(keep);
  for (std::int64_t e = 0; e < m; ++e) {
    if (mask[e]) out.push_back(edges[e]);
  }
  return GraphBuilderAccess::trusted(g.num_nodes(), std::move(out));
}

Graph bernoulli(const Graph& g, double retain, std::uint64_t seed) {
  const auto edges = g.edges();
  const auto m = static_cast<std::int64_t>(edges.size());
  std::vector<std::uint8_t> mask(edges.size(), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t e = 0; e < m; ++e) {
    StreamRng rng(seed, RngDomain::kRandomBernoulli, static_cast<std::uint64_t>(e));
    mask[e] = rng.unit() < retain;
  }
  std::vector<Edge> out;
  for (std::int64_t e = 0; e < m; ++e) {
    if (mask[e]) out.push_back(edges[e]);
  }
  return GraphBuilderAccess::trusted(g.num_nodes(), std::move(out));
}

}  // namespace

Graph random_sparsify(const Graph& g, double removal_ratio, std::uint64_t seed, bool use_bernoulli) {
  const double retain = 1.0 - removal_ratio;
  if (use_bernoulli) return bernoulli(g, retain, seed);
  const auto keep = static_cast<EdgeId>(std::llround(retain * static_cast<double>(g.num_edges())));
  return exact_count(g, std::min(keep, g.num_edges()), seed);
}

}  // namespace gsparse
