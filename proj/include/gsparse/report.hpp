#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "gsparse/graph.hpp"
#include "gsparse/sparsify.hpp"
#include "gsparse/timing.hpp"

namespace gsparse {

inline constexpr std::string_view kToolkitVersion = "0.3.0";

struct DegreeSummary {
  NodeId min = 0;
  double median = 0.0;
  double mean = 0.0;
  NodeId max = 0;

  friend bool operator==(const DegreeSummary&, const DegreeSummary&) = default;
};

struct OutputStats {
  EdgeId edges = 0;
  double edge_reduction_pct = 0.0;
  NodeId node_coverage = 0;
  DegreeSummary degree;  // over every node of the output graph

  friend bool operator==(const OutputStats&, const OutputStats&) = default;
};

/// Requires output.edges ⊆ input.edges; the reduction percentage is exact
/// (rounded only when written to a report).
OutputStats compute_stats(const Graph& input, const Graph& output);

/// Configuration as recorded in a report. Seed nodes are summarized by count
/// and digest rather than listed.
struct ConfigEcho {
  Method method = Method::kRandom;
  double removal_ratio = 0.0;
  bool bernoulli = false;
  std::uint32_t k = 0;
  double rho = 0.0;
  double target_node_fraction = 0.0;
  std::uint64_t seed_node_count = 0;
  std::uint64_t seed_node_digest = 0;
  std::uint64_t random_seed_count = 0;
  std::uint32_t max_hops = 0;
  double alpha = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const ConfigEcho&, const ConfigEcho&) = default;
};

ConfigEcho echo_config(const SparsifierConfig& cfg, NodeId num_nodes);

struct RunReport {
  std::string toolkit_version{kToolkitVersion};
  ConfigEcho config;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  NodeId input_nodes = 0;
  EdgeId input_edges = 0;
  OutputStats output;
  RankDegreeTrace trace;
  TimingBreakdown timing;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Rounds the reduction percentage to one decimal, the precision reports
/// carry.
double round_reduction(double pct);

RunReport make_run_report(const Graph& input, const SparsificationResult& result,
                          unsigned threads, const TimingBreakdown& timing);

/// JSON document with a fixed key order (schema in docs/formats.md).
std::string to_json(const RunReport& report);
/// Throws kParse on malformed documents.
RunReport parse_report(std::string_view json);

void emit_report(const RunReport& report, const std::filesystem::path& path);
RunReport read_report(const std::filesystem::path& path);

}  // namespace gsparse
