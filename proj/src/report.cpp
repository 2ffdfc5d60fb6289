#include "gsparse/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "json.hpp"

#include "file_util.hpp"
#include "gsparse/error.hpp"

namespace gsparse {

using json = nlohmann::ordered_json;

OutputStats compute_stats(const Graph& input, const Graph& output) {
  OutputStats stats;
  stats.edges = output.num_edges();
  stats.edge_reduction_pct = edge_reduction_pct(input.num_edges(), output.num_edges());
  stats.node_coverage = covered_nodes(output);

  const NodeId n = output.num_nodes();
  if (n == 0) return stats;
  std::vector<NodeId> degree(n, 0);
  for (const Edge& e : output.edges()) {
    ++degree[e.u];
    ++degree[e.v];
  }
  const auto [lo, hi] = std::minmax_element(degree.begin(), degree.end());
  stats.degree.min = *lo;
  stats.degree.max = *hi;
  stats.degree.mean = 2.0 * static_cast<double>(output.num_edges()) / n;

  const std::size_t mid = n / 2;
  std::nth_element(degree.begin(), degree.begin() + mid, degree.end());
  const double upper = degree[mid];
  if (n % 2 == 1) {
    stats.degree.median = upper;
  } else {
    const double lower = *std::max_element(degree.begin(), degree.begin() + mid);
    stats.degree.median = (lower + upper) / 2.0;
  }
  return stats;
}

ConfigEcho echo_config(const SparsifierConfig& cfg, NodeId num_nodes) {
  ConfigEcho echo;
  echo.method = cfg.method;
  echo.removal_ratio = cfg.removal_ratio;
  echo.bernoulli = cfg.bernoulli;
  echo.k = cfg.k;
  echo.rho = cfg.rho;
  echo.target_node_fraction = cfg.target_node_fraction;
  echo.seed_node_count = cfg.seeds.size();
  echo.seed_node_digest = cfg.seeds.digest();
  echo.random_seed_count = cfg.random_seed_count;
  echo.max_hops = cfg.max_hops > 0 ? cfg.max_hops : default_max_hops(num_nodes);
  echo.alpha = cfg.alpha;
  echo.seed = cfg.seed;
  return echo;
}

double round_reduction(double pct) { return std::round(pct * 10.0) / 10.0; }

RunReport make_run_report(const Graph& input, const SparsificationResult& result,
                          unsigned threads, const TimingBreakdown& timing) {
  RunReport report;
  report.config = echo_config(result.config, input.num_nodes());
  report.seed = result.config.seed;
  report.threads = threads;
  report.input_nodes = input.num_nodes();
  report.input_edges = input.num_edges();
  report.output = compute_stats(input, result.graph);
  report.output.edge_reduction_pct = round_reduction(report.output.edge_reduction_pct);
  report.trace = result.trace;
  report.timing = timing;
  return report;
}

namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::uint64_t parse_hex64(const std::string& s) {
  std::size_t used = 0;
  const auto v = std::stoull(s, &used, 16);
  if (used != s.size()) throw std::invalid_argument("bad hex digest");
  return v;
}

double seconds(std::chrono::milliseconds ms) { return static_cast<double>(ms.count()) / 1000.0; }

std::chrono::milliseconds from_seconds(double s) {
  return std::chrono::milliseconds(std::llround(s * 1000.0));
}

}  // namespace

std::string to_json(const RunReport& r) {
  json doc;
  doc["toolkit_version"] = r.toolkit_version;
  doc["seed"] = r.seed;
  doc["threads"] = r.threads;

  json& cfg = doc["config"];
  cfg["method"] = method_info(r.config.method).name;
  cfg["removal_ratio"] = r.config.removal_ratio;
  cfg["bernoulli"] = r.config.bernoulli;
  cfg["k"] = r.config.k;
  cfg["rho"] = r.config.rho;
  cfg["target_node_fraction"] = r.config.target_node_fraction;
  cfg["seed_nodes"] = {{"count", r.config.seed_node_count},
                       {"digest", hex64(r.config.seed_node_digest)}};
  cfg["random_seed_count"] = r.config.random_seed_count;
  cfg["max_hops"] = r.config.max_hops;
  cfg["alpha"] = r.config.alpha;
  cfg["seed"] = r.config.seed;

  doc["input"] = {{"nodes", r.input_nodes}, {"edges", r.input_edges}};
  doc["output"] = {
      {"edges", r.output.edges},
      {"edge_reduction_pct", r.output.edge_reduction_pct},
      {"node_coverage", r.output.node_coverage},
      {"degree",
       {{"min", r.output.degree.min},
        {"median", r.output.degree.median},
        {"mean", r.output.degree.mean},
        {"max", r.output.degree.max}}},
  };
  doc["rank_degree"] = {{"hops", r.trace.hops},
                        {"fallback_reseeds", r.trace.fallback_reseeds},
                        {"truncated", r.trace.truncated}};

  json phases = json::array();
  for (const auto& p : r.timing.phases) {
    phases.push_back({{"name", phase_name(p.phase)}, {"seconds", seconds(p.duration)}});
  }
  doc["timing"] = {{"phases", std::move(phases)}, {"total_seconds", seconds(r.timing.total)}};
  return doc.dump(2) + "\n";
}

RunReport parse_report(std::string_view text) {
  try {
    const json doc = json::parse(text);
    RunReport r;
    r.toolkit_version = doc.at("toolkit_version").get<std::string>();
    r.seed = doc.at("seed").get<std::uint64_t>();
    r.threads = doc.at("threads").get<unsigned>();

    const json& cfg = doc.at("config");
    r.config.method = parse_method(cfg.at("method").get<std::string>());
    r.config.removal_ratio = cfg.at("removal_ratio").get<double>();
    r.config.bernoulli = cfg.at("bernoulli").get<bool>();
    r.config.k = cfg.at("k").get<std::uint32_t>();
    r.config.rho = cfg.at("rho").get<double>();
    r.config.target_node_fraction = cfg.at("target_node_fraction").get<double>();
    r.config.seed_node_count = cfg.at("seed_nodes").at("count").get<std::uint64_t>();
    r.config.seed_node_digest = parse_hex64(cfg.at("seed_nodes").at("digest").get<std::string>());
    r.config.random_seed_count = cfg.at("random_seed_count").get<std::uint64_t>();
    r.config.max_hops = cfg.at("max_hops").get<std::uint32_t>();
    r.config.alpha = cfg.at("alpha").get<double>();
    r.config.seed = cfg.at("seed").get<std::uint64_t>();

    r.input_nodes = doc.at("input").at("nodes").get<NodeId>();
    r.input_edges = doc.at("input").at("edges").get<EdgeId>();

    const json& out = doc.at("output");
    r.output.edges = out.at("edges").get<EdgeId>();
    r.output.edge_reduction_pct = out.at("edge_reduction_pct").get<double>();
    r.output.node_coverage = out.at("node_coverage").get<NodeId>();
    r.output.degree.min = out.at("degree").at("min").get<NodeId>();
    r.output.degree.median = out.at("degree").at("median").get<double>();
    r.output.degree.mean = out.at("degree").at("mean").get<double>();
    r.output.degree.max = out.at("degree").at("max").get<NodeId>();

    const json& rd = doc.at("rank_degree");
    r.trace.hops = rd.at("hops").get<std::uint32_t>();
    r.trace.fallback_reseeds = rd.at("fallback_reseeds").get<std::uint32_t>();
    r.trace.truncated = rd.at("truncated").get<bool>();

    for (const json& p : doc.at("timing").at("phases")) {
      r.timing.phases.push_back(
          {parse_phase(p.at("name").get<std::string>()), from_seconds(p.at("seconds").get<double>())});
    }
    r.timing.total = from_seconds(doc.at("timing").at("total_seconds").get<double>());
    return r;
  } catch (const std::exception& e) {
    throw Error(ErrorKind::kParse, std::string("malformed run report: ") + e.what());
  }
}

void emit_report(const RunReport& report, const std::filesystem::path& path) {
  detail::write_file(path, to_json(report));
}

RunReport read_report(const std::filesystem::path& path) {
  return parse_report(detail::read_file(path));
}

}  // namespace gsparse
