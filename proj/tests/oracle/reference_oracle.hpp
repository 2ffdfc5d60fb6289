#pragma once

#include <set>

#include "gsparse/graph.hpp"
#include "gsparse/sparsify.hpp"

namespace gsparse::testing {

struct OracleResult {
  std::set<Edge> edges;
  RankDegreeTrace trace;
};

/// Deliberately naive, single-threaded transcription of the four
/// sparsifiers, for small graphs only. It builds its own neighbor sets from
/// the edge list and shares nothing with the library except the random
/// stream definitions in gsparse/rng.hpp.
OracleResult reference_oracle(const Graph& g, const SparsifierConfig& cfg);

std::set<Edge> edge_set(const Graph& g);

}  // namespace gsparse::testing
