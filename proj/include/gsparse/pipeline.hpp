#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "gsparse/io.hpp"
#include "gsparse/report.hpp"
#include "gsparse/sparsify.hpp"

namespace gsparse {

/// Number of worker threads used by parallel regions.
unsigned worker_count();
/// Sets the worker count for subsequent parallel regions (0 = all cores).
void set_worker_count(unsigned workers);

/// Sets the worker count for the lifetime of the object.
class WorkerScope {
 public:
  explicit WorkerScope(unsigned workers) : previous_(worker_count()) { set_worker_count(workers); }
  ~WorkerScope() { set_worker_count(previous_); }
  WorkerScope(const WorkerScope&) = delete;
  WorkerScope& operator=(const WorkerScope&) = delete;

 private:
  unsigned previous_;
};

struct OutputSpec {
  std::filesystem::path path;  // stem for paired arrays
  io::Format format = io::Format::kNativeEdgeList;
};

/// One file-to-file run: load, sparsify, optionally persist the summarized
/// graph and the report. Every phase is timed.
struct PipelineRun {
  Graph input;
  SparsificationResult result;
  RunReport report;
};

PipelineRun run_file_pipeline(const io::InputSpec& input, const SparsifierConfig& cfg,
                              const std::optional<OutputSpec>& output,
                              const std::optional<std::filesystem::path>& report_path);

/// Sparsification of an already loaded graph; `load_timing` carries the
/// dataset_load and to_internal durations measured by the caller.
PipelineRun run_loaded_pipeline(const Graph& input, const SparsifierConfig& cfg,
                                const std::optional<OutputSpec>& output,
                                const std::optional<std::filesystem::path>& report_path,
                                std::chrono::nanoseconds read_time,
                                std::chrono::nanoseconds canonicalize_time);

/// In-memory array boundary for language bindings: endpoints as plain
/// 64-bit integer arrays in, canonical output endpoints out. Conversion into
/// and out of the core representation is timed as to_internal and export;
/// the binding adds its own host-side conversions via `PhaseTimer::add`
/// with kBindingIngress / kBindingEgress before calling `finish`.
struct ArraySummary {
  std::vector<std::int64_t> src;
  std::vector<std::int64_t> dst;
  RunReport report;
};

/// Raises gsparse::Error (kFormat for length mismatch, kOutOfRange for ids
/// outside [0, num_nodes), kValidation for bad configurations).
ArraySummary summarize_arrays(std::span<const std::int64_t> src,
                              std::span<const std::int64_t> dst, std::int64_t num_nodes,
                              const SparsifierConfig& cfg, PhaseTimer& timer);

ArraySummary summarize_arrays(std::span<const std::int64_t> src,
                              std::span<const std::int64_t> dst, std::int64_t num_nodes,
                              const SparsifierConfig& cfg);

}  // namespace gsparse
