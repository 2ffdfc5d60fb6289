#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "gsparse/error.hpp"
#include "gsparse/sparsify.hpp"

namespace gsparse::cli {

/// Process exit codes. Each error class has its own code so scripts can
/// branch without parsing the message.
enum ExitCode : int {
  kOk = 0,
  kCellFailures = 1,  // sweep finished but at least one cell failed
  kValidation = 2,
  kParse = 3,
  kFormat = 4,
  kOutOfRange = 5,
  kCapacity = 6,
  kIo = 7,
  kInternal = 70,
};

int exit_code_for(ErrorKind kind);

/// One cell of a parameter sweep.
struct SweepCell {
  std::string name;  // <method>__<param>=<value>[__<param>=<value>]__seed=<seed>
  SparsifierConfig config;
};

struct SweepGrid {
  Method method = Method::kKNeighbor;
  std::vector<double> removal_ratios;
  std::vector<std::uint32_t> ks;
  std::vector<double> rhos;
  std::vector<double> target_fractions;
  std::vector<double> alphas;
};

/// The grid used for the compression sweep on ogbn-products: removal ratio
/// {0.25, 0.5, 0.75}; k {3, 5, 10}; rho x target {0.25, 0.5, 0.75}^2;
/// alpha {0.25, 0.5, 0.9}.
SweepGrid standard_grid(Method method);

/// Expands the grid for `grid.method` on top of `base`. Throws kValidation
/// when the method's grid is empty. `per_cell_seeds` gives cell i the seed
/// base.seed + i.
std::vector<SweepCell> expand_grid(const SweepGrid& grid, const SparsifierConfig& base,
                                   bool per_cell_seeds);

/// Shortest round-trip decimal spelling used in cell names ("0.25", "5").
std::string format_value(double value);

/// Entry point of the `sparsify` tool. Never throws; errors become one line
/// on `err` of the form "sparsify: <ErrorClass>: <message>".
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gsparse::cli
