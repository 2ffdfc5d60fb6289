#include "gsparse/pipeline.hpp"

#include <string>

#include <omp.h>

#include "gsparse/error.hpp"

namespace gsparse {

unsigned worker_count() { return static_cast<unsigned>(omp_get_max_threads()); }

void set_worker_count(unsigned workers) {
  omp_set_num_threads(workers == 0 ? omp_get_num_procs() : static_cast<int>(workers));
}

namespace {

PipelineRun finish_run(const Graph& input, const SparsifierConfig& cfg, PhaseTimer& timer,
                       const std::optional<OutputSpec>& output,
                       const std::optional<std::filesystem::path>& report_path) {
  PipelineRun run;
  run.result = summarize_graph(input, cfg, timer);
  if (output) {
    timer.measure(Phase::kExport,
                  [&] { io::save_graph(run.result.graph, output->path, output->format); });
  }
  run.result.timing = timer.finish();
  run.report = make_run_report(input, run.result, worker_count(), run.result.timing);
  if (report_path) emit_report(run.report, *report_path);
  return run;
}

}  // namespace

PipelineRun run_file_pipeline(const io::InputSpec& input, const SparsifierConfig& cfg,
                              const std::optional<OutputSpec>& output,
                              const std::optional<std::filesystem::path>& report_path) {
  PhaseTimer timer;
  const io::RawEdges raw = timer.measure(Phase::kDatasetLoad, [&] { return io::read_raw(input); });
  Graph graph = timer.measure(Phase::kToInternal,
                              [&] { return io::to_graph(raw, input.num_nodes).graph; });
  auto run = finish_run(graph, cfg, timer, output, report_path);
  run.input = std::move(graph);
  return run;
}

PipelineRun run_loaded_pipeline(const Graph& input, const SparsifierConfig& cfg,
                                const std::optional<OutputSpec>& output,
                                const std::optional<std::filesystem::path>& report_path,
                                std::chrono::nanoseconds read_time,
                                std::chrono::nanoseconds canonicalize_time) {
  PhaseTimer timer;
  timer.add(Phase::kDatasetLoad, read_time);
  timer.add(Phase::kToInternal, canonicalize_time);
  auto run = finish_run(input, cfg, timer, output, report_path);
  run.input = input;
  return run;
}

ArraySummary summarize_arrays(std::span<const std::int64_t> src,
                              std::span<const std::int64_t> dst, std::int64_t num_nodes,
                              const SparsifierConfig& cfg, PhaseTimer& timer) {
  if (src.size() != dst.size()) {
    throw Error(ErrorKind::kFormat, "src and dst arrays differ in length (" +
                                        std::to_string(src.size()) + " vs " +
                                        std::to_string(dst.size()) + ")");
  }
  if (num_nodes < 0 || static_cast<std::uint64_t>(num_nodes) > kMaxNodes) {
    throw Error(ErrorKind::kCapacity, "num_nodes=" + std::to_string(num_nodes) +
                                          " is outside the supported range");
  }
  const auto n = static_cast<NodeId>(num_nodes);

  const Graph graph = timer.measure(Phase::kToInternal, [&] {
    std::vector<NodeId> s(src.size());
    std::vector<NodeId> d(dst.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (src[i] < 0 || dst[i] < 0 || src[i] >= num_nodes || dst[i] >= num_nodes) {
        throw Error(ErrorKind::kOutOfRange,
                    "edge #" + std::to_string(i) + " (" + std::to_string(src[i]) + ", " +
                        std::to_string(dst[i]) + ") is outside [0, " +
                        std::to_string(num_nodes) + ")");
      }
      s[i] = static_cast<NodeId>(src[i]);
      d[i] = static_cast<NodeId>(dst[i]);
    }
    return canonicalize(s, d, n).graph;
  });

  ArraySummary out;
  auto result = summarize_graph(graph, cfg, timer);
  timer.measure(Phase::kExport, [&] {
    out.src.resize(result.graph.num_edges());
    out.dst.resize(result.graph.num_edges());
    const auto edges = result.graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      out.src[i] = edges[i].u;
      out.dst[i] = edges[i].v;
    }
  });
  out.report = make_run_report(graph, result, worker_count(), timer.finish());
  return out;
}

ArraySummary summarize_arrays(std::span<const std::int64_t> src,
                              std::span<const std::int64_t> dst, std::int64_t num_nodes,
                              const SparsifierConfig& cfg) {
  PhaseTimer timer;
  return summarize_arrays(src, dst, num_nodes, cfg, timer);
}

}  // namespace gsparse
