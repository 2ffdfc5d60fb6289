#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gsparse/graph.hpp"
#include "gsparse/seeds.hpp"

namespace gsparse::io {

enum class Format {
  kCsvEdgeList,        // "u,v" or "u<TAB>v" per line, optional header line
  kPairedArrays,       // two .npy files: source ids, destination ids
  kNativeEdgeList,     // canonical binary edge list (docs/formats.md)
};

std::string_view format_name(Format format);
/// Accepts "csv", "npy" and "native". Throws kValidation otherwise.
Format parse_format(std::string_view name);
/// Guesses from the extension: .npy -> paired arrays, .gse -> native,
/// anything else -> CSV.
Format format_from_extension(const std::filesystem::path& path);

struct InputSpec {
  Format format = Format::kCsvEdgeList;
  /// One path, or two (source, destination) for kPairedArrays.
  std::vector<std::filesystem::path> paths;
  /// Overrides max id + 1; may exceed it to declare isolated nodes.
  std::optional<std::uint64_t> num_nodes;
};

/// Edge endpoints as read from disk, before canonicalization.
struct RawEdges {
  std::vector<NodeId> src;
  std::vector<NodeId> dst;
  /// Embedded node count (native format only).
  std::optional<NodeId> num_nodes;
};

struct LoadStats {
  EdgeId raw_edges = 0;
  EdgeId self_loops_dropped = 0;
  EdgeId duplicates_collapsed = 0;
  std::chrono::nanoseconds read_time{0};          // file -> RawEdges
  std::chrono::nanoseconds canonicalize_time{0};  // RawEdges -> Graph
  std::chrono::nanoseconds load_time{0};          // both
};

struct Loaded {
  Graph graph;
  LoadStats stats;
};

/// Reads the files named by `spec` without canonicalizing.
RawEdges read_raw(const InputSpec& spec);

/// Resolves the node count (explicit, embedded, or max id + 1) and
/// canonicalizes.
Canonicalized to_graph(const RawEdges& raw, std::optional<std::uint64_t> num_nodes);

Loaded load_graph(const InputSpec& spec);

/// Writes `g` to `path`. For kPairedArrays, `path` is a stem and two files
/// are written (see `paired_array_paths`). Loading the result with the same
/// format and `num_nodes = g.num_nodes()` reproduces `g`; the native format
/// stores the node count itself.
void save_graph(const Graph& g, const std::filesystem::path& path, Format format);

/// {stem + "_src.npy", stem + "_dst.npy"}.
std::vector<std::filesystem::path> paired_array_paths(const std::filesystem::path& stem);

/// Parses one id per line. Blank lines are ignored.
SeedNodeSet load_seed_nodes(const std::filesystem::path& path, NodeId num_nodes);

// NumPy .npy container for 1-D integer arrays ------------------------------

/// Reads a 1-D little-endian int32/int64 array, rejecting every other dtype.
/// Negative values raise kFormat.
std::vector<std::int64_t> read_npy_ints(const std::filesystem::path& path);
/// Writes a version 1.0 '<i8' array.
void write_npy_ints(const std::filesystem::path& path, std::span<const std::int64_t> values);

}  // namespace gsparse::io
