#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace gsparse {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent stream families. Every stochastic choice in the toolkit draws
/// from a stream identified by (global seed, domain, index), so results do
/// not depend on scheduling or thread count.
enum class RngDomain : std::uint64_t {
  kRandomEdgeKey = 1,
  kRandomBernoulli = 2,
  kKNeighbor = 3,
  kRankDegreeInitialSeeds = 4,
  kRankDegreeFallback = 5,
};

/// SplitMix64 generator positioned on stream (seed, domain, index).
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, RngDomain domain, std::uint64_t index) noexcept
      : state_(mix64(seed ^ mix64(static_cast<std::uint64_t>(domain) * 0xd1b54a32d192ed03ULL +
                                  mix64(index)))) {}

  std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound), bound > 0 (Lemire's multiply-shift with
  /// rejection).
  std::uint64_t below(std::uint64_t bound) noexcept {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// First draw of stream (seed, domain, index); used as a per-item sort key.
inline std::uint64_t stream_key(std::uint64_t seed, RngDomain domain, std::uint64_t index) noexcept {
  return StreamRng(seed, domain, index).next();
}

/// `count` distinct values from [0, n), uniformly, sorted ascending
/// (Floyd's algorithm). Requires count <= n.
inline std::vector<std::uint64_t> sample_distinct(std::uint64_t n, std::uint64_t count,
                                                  StreamRng& rng) {
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = n - count; j < n; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace gsparse
