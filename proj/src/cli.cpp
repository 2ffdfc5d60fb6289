#include "gsparse/cli.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "gsparse/io.hpp"
#include "gsparse/pipeline.hpp"

namespace gsparse::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kValidation: return kValidation;
    case ErrorKind::kParse: return kParse;
    case ErrorKind::kFormat: return kFormat;
    case ErrorKind::kOutOfRange: return kOutOfRange;
    case ErrorKind::kCapacity: return kCapacity;
    case ErrorKind::kIo: return kIo;
  }
  return kInternal;
}

std::string format_value(double value) {
  char buf[32];
  const auto end = std::to_chars(buf, buf + sizeof buf, value).ptr;
  return {buf, end};
}

SweepGrid standard_grid(Method method) {
  SweepGrid grid;
  grid.method = method;
  grid.removal_ratios = {0.25, 0.5, 0.75};
  grid.ks = {3, 5, 10};
  grid.rhos = {0.25, 0.5, 0.75};
  grid.target_fractions = {0.25, 0.5, 0.75};
  grid.alphas = {0.25, 0.5, 0.9};
  return grid;
}

std::vector<SweepCell> expand_grid(const SweepGrid& grid, const SparsifierConfig& base,
                                   bool per_cell_seeds) {
  std::vector<SweepCell> cells;
  const std::string method(method_info(grid.method).name);
  auto add = [&](std::string params, auto&& apply) {
    SweepCell cell;
    cell.config = base;
    cell.config.method = grid.method;
    apply(cell.config);
    if (per_cell_seeds) cell.config.seed = base.seed + cells.size();
    cell.name = method + "__" + params + "__seed=" + std::to_string(cell.config.seed);
    cells.push_back(std::move(cell));
  };

  switch (grid.method) {
    case Method::kRandom:
      for (const double r : grid.removal_ratios) {
        add("removal_ratio=" + format_value(r), [&](SparsifierConfig& c) { c.removal_ratio = r; });
      }
      break;
    case Method::kKNeighbor:
      for (const std::uint32_t k : grid.ks) {
        add("k=" + std::to_string(k), [&](SparsifierConfig& c) { c.k = k; });
      }
      break;
    case Method::kRankDegree:
      for (const double target : grid.target_fractions) {
        for (const double rho : grid.rhos) {
          add("target=" + format_value(target) + "__rho=" + format_value(rho),
              [&](SparsifierConfig& c) {
                c.target_node_fraction = target;
                c.rho = rho;
              });
        }
      }
      break;
    case Method::kLocalDegree:
      for (const double alpha : grid.alphas) {
        add("alpha=" + format_value(alpha), [&](SparsifierConfig& c) { c.alpha = alpha; });
      }
      break;
  }
  if (cells.empty()) {
    throw Error(ErrorKind::kValidation,
                "parameter grid for " + method + " is empty; give values or --standard-grid");
  }
  return cells;
}

namespace {

struct InputFlags {
  std::vector<std::string> paths;
  std::string format;
  std::optional<std::uint64_t> num_nodes;

  void add_to(CLI::App& app) {
    app.add_option("-i,--input", paths,
                   "Edge list file, or two .npy files (source then destination)")
        ->required()
        ->expected(1, 2);
    app.add_option("--format", format, "Input format: csv, npy or native (default: by extension)");
    app.add_option("--num-nodes", num_nodes, "Node count (default: max id + 1)");
  }

  io::InputSpec spec() const {
    io::InputSpec spec;
    for (const auto& p : paths) spec.paths.emplace_back(p);
    spec.format = format.empty() ? io::format_from_extension(spec.paths.front())
                                 : io::parse_format(format);
    spec.num_nodes = num_nodes;
    return spec;
  }
};

struct SharedFlags {
  std::string method;
  bool bernoulli = false;
  std::string seeds_file;
  std::uint64_t random_seeds = 0;
  std::uint32_t max_hops = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string out_format;

  void add_to(CLI::App& app) {
    app.add_option("-m,--method", method, "random | k-neighbor | rank-degree | local-degree")
        ->required();
    app.add_flag("--bernoulli", bernoulli, "Random: independent per-edge coin flips");
    app.add_option("--seeds", seeds_file, "Rank Degree: file with one seed node id per line");
    app.add_option("--random-seeds", random_seeds,
                   "Rank Degree: start from this many random nodes when --seeds is absent");
    app.add_option("--max-hops", max_hops, "Rank Degree: hop limit (default 10*ceil(log2 n + 1))");
    app.add_option("-s,--seed", seed, "Random seed")->capture_default_str();
    app.add_option("-t,--threads", threads, "Worker threads (0 = all cores)")
        ->capture_default_str();
    app.add_option("--out-format", out_format,
                   "Output graph format: csv, npy or native (default: by extension)");
  }

  SparsifierConfig base_config(const Graph& g) const {
    SparsifierConfig cfg;
    cfg.method = parse_method(method);
    cfg.bernoulli = bernoulli;
    cfg.random_seed_count = random_seeds;
    cfg.max_hops = max_hops;
    cfg.seed = seed;
    if (!seeds_file.empty()) cfg.seeds = io::load_seed_nodes(seeds_file, g.num_nodes());
    return cfg;
  }
};

struct RunFlags {
  InputFlags input;
  SharedFlags shared;
  double removal_ratio = 0.30;
  std::uint32_t k = 5;
  double rho = 0.50;
  double target_fraction = 0.25;
  double alpha = 0.5;
  std::string out;
  std::string report;
};

struct SweepFlags {
  InputFlags input;
  SharedFlags shared;
  std::vector<double> removal_ratios;
  std::vector<std::uint32_t> ks;
  std::vector<double> rhos;
  std::vector<double> target_fractions;
  std::vector<double> alphas;
  bool standard = false;
  std::string seed_policy = "fixed";
  bool parallel_cells = false;
  std::string out_dir;
};

void check_method_early(const std::string& method, const SharedFlags& shared) {
  if (parse_method(method) == Method::kRankDegree && shared.seeds_file.empty() &&
      shared.random_seeds == 0) {
    throw Error(ErrorKind::kValidation, "rank-degree needs --seeds FILE or --random-seeds N");
  }
}

OutputSpec output_spec(const std::string& path, const std::string& format) {
  OutputSpec spec;
  spec.path = path;
  spec.format = format.empty() ? io::format_from_extension(spec.path) : io::parse_format(format);
  return spec;
}

struct LoadedInput {
  Graph graph;
  io::LoadStats stats;
};

LoadedInput load_input(const InputFlags& flags) {
  auto loaded = io::load_graph(flags.spec());
  return {std::move(loaded.graph), loaded.stats};
}

int do_run(const RunFlags& f, std::ostream& out) {
  check_method_early(f.shared.method, f.shared);
  set_worker_count(f.shared.threads);

  const auto loaded = load_input(f.input);
  SparsifierConfig cfg = f.shared.base_config(loaded.graph);
  cfg.removal_ratio = f.removal_ratio;
  cfg.k = f.k;
  cfg.rho = f.rho;
  cfg.target_node_fraction = f.target_fraction;
  cfg.alpha = f.alpha;

  std::optional<OutputSpec> output;
  if (!f.out.empty()) output = output_spec(f.out, f.shared.out_format);
  std::optional<std::filesystem::path> report;
  if (!f.report.empty()) report = f.report;

  const auto run = run_loaded_pipeline(loaded.graph, cfg, output, report, loaded.stats.read_time,
                                       loaded.stats.canonicalize_time);
  out << method_info(cfg.method).name << ": " << run.report.input_edges << " -> "
      << run.report.output.edges << " edges (" << std::fixed << std::setprecision(1)
      << run.report.output.edge_reduction_pct << "% reduction), sparsification "
      << std::setprecision(3) << run.report.timing.seconds(Phase::kSparsification) << " s\n";
  return kOk;
}

struct CellOutcome {
  bool ok = false;
  RunReport report;
  std::string error_class;
  std::string message;
};

int do_sweep(const SweepFlags& f, std::ostream& out, std::ostream& err) {
  check_method_early(f.shared.method, f.shared);
  if (f.seed_policy != "fixed" && f.seed_policy != "per-cell") {
    throw Error(ErrorKind::kValidation, "--seed-policy must be 'fixed' or 'per-cell'");
  }
  const Method method = parse_method(f.shared.method);
  SweepGrid grid = f.standard ? standard_grid(method) : SweepGrid{};
  grid.method = method;
  if (!f.removal_ratios.empty()) grid.removal_ratios = f.removal_ratios;
  if (!f.ks.empty()) grid.ks = f.ks;
  if (!f.rhos.empty()) grid.rhos = f.rhos;
  if (!f.target_fractions.empty()) grid.target_fractions = f.target_fractions;
  if (!f.alphas.empty()) grid.alphas = f.alphas;

  set_worker_count(f.shared.threads);
  const auto loaded = load_input(f.input);
  const auto cells = expand_grid(grid, f.shared.base_config(loaded.graph), f.seed_policy == "per-cell");

  const std::filesystem::path dir(f.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::kIo, "cannot create '" + dir.string() + "': " + ec.message());

  const std::string format = f.shared.out_format.empty() ? "native" : f.shared.out_format;
  const io::Format out_format = io::parse_format(format);
  const std::string extension = out_format == io::Format::kNativeEdgeList ? ".bin"
                                : out_format == io::Format::kCsvEdgeList  ? ".csv"
                                                                          : "";

  std::vector<CellOutcome> outcomes(cells.size());
  auto run_cell = [&](std::size_t i) {
    const SweepCell& cell = cells[i];
    try {
      const OutputSpec output{dir / (cell.name + extension), out_format};
      const auto run = run_loaded_pipeline(loaded.graph, cell.config, output,
                                           dir / (cell.name + ".json"), loaded.stats.read_time,
                                           loaded.stats.canonicalize_time);
      outcomes[i].ok = true;
      outcomes[i].report = run.report;
    } catch (const Error& e) {
      outcomes[i].error_class = error_class(e.kind());
      outcomes[i].message = e.what();
    } catch (const std::exception& e) {
      outcomes[i].error_class = "InternalError";
      outcomes[i].message = e.what();
    }
  };

  if (f.parallel_cells) {
    std::vector<std::jthread> workers;
    for (std::size_t i = 0; i < cells.size(); ++i) workers.emplace_back(run_cell, i);
  } else {
    for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
  }

  std::ostringstream summary;
  summary << "cell,edges,edge_reduction_pct,sparsification_seconds\n";
  std::ostringstream failures;
  failures << "cell,error_class,message\n";
  std::size_t failed = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& o = outcomes[i];
    if (o.ok) {
      summary << cells[i].name << ',' << o.report.output.edges << ',' << std::fixed
              << std::setprecision(1) << o.report.output.edge_reduction_pct << ','
              << std::setprecision(3) << o.report.timing.seconds(Phase::kSparsification) << '\n';
      out << cells[i].name << ": " << o.report.output.edges << " edges, " << std::fixed
          << std::setprecision(1) << o.report.output.edge_reduction_pct << "% reduction\n";
    } else {
      ++failed;
      std::string message = o.message;
      std::replace(message.begin(), message.end(), '\n', ' ');
      std::replace(message.begin(), message.end(), ',', ';');
      failures << cells[i].name << ',' << o.error_class << ',' << message << '\n';
      err << "sparsify: cell " << cells[i].name << ": " << o.error_class << ": " << o.message
          << '\n';
    }
  }
  std::ofstream(dir / "summary.csv") << summary.str();
  if (failed > 0) std::ofstream(dir / "failures.csv") << failures.str();
  return failed > 0 ? kCellFailures : kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Graph sparsification toolkit", "sparsify");
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file supplying any flag; the command line wins");

  RunFlags run;
  auto* run_cmd = app.add_subcommand("run", "Sparsify one graph with one configuration");
  run.input.add_to(*run_cmd);
  run.shared.add_to(*run_cmd);
  run_cmd->add_option("--removal-ratio", run.removal_ratio, "Random: fraction of edges removed")
      ->capture_default_str();
  run_cmd->add_option("-k,--k", run.k, "K-Neighbor: edges kept per vertex")->capture_default_str();
  run_cmd->add_option("--rho", run.rho, "Rank Degree: top fraction of neighbors per hop")
      ->capture_default_str();
  run_cmd->add_option("--target-fraction", run.target_fraction,
                      "Rank Degree: stop once this fraction of nodes is covered")
      ->capture_default_str();
  run_cmd->add_option("--alpha", run.alpha, "Local Degree: exponent of the per-vertex quota")
      ->capture_default_str();
  run_cmd->add_option("-o,--out", run.out, "Summarized graph output path (stem for npy)");
  run_cmd->add_option("-r,--report", run.report, "JSON run report path");

  SweepFlags sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a parameter grid for one method");
  sweep.input.add_to(*sweep_cmd);
  sweep.shared.add_to(*sweep_cmd);
  sweep_cmd->add_option("--removal-ratio", sweep.removal_ratios, "Random grid")->delimiter(',');
  sweep_cmd->add_option("-k,--k", sweep.ks, "K-Neighbor grid")->delimiter(',');
  sweep_cmd->add_option("--rho", sweep.rhos, "Rank Degree neighbor-fraction grid")->delimiter(',');
  sweep_cmd->add_option("--target-fraction", sweep.target_fractions, "Rank Degree target grid")
      ->delimiter(',');
  sweep_cmd->add_option("--alpha", sweep.alphas, "Local Degree grid")->delimiter(',');
  sweep_cmd->add_flag("--standard-grid", sweep.standard,
                      "Fill unspecified grids with the standard compression sweep");
  sweep_cmd->add_option("--seed-policy", sweep.seed_policy, "fixed | per-cell")
      ->capture_default_str();
  sweep_cmd->add_flag("--parallel-cells", sweep.parallel_cells, "Run grid cells concurrently");
  sweep_cmd->add_option("-d,--out-dir", sweep.out_dir, "Directory for graphs and reports")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "sparsify: ValidationError: " << e.what() << '\n';
    return kValidation;
  }

  try {
    if (run_cmd->parsed()) return do_run(run, out);
    return do_sweep(sweep, out, err);
  } catch (const Error& e) {
    err << "sparsify: " << error_class(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "sparsify: InternalError: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace gsparse::cli
