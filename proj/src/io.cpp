#include "gsparse/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <string>

#include "file_util.hpp"
#include "gsparse/error.hpp"
#include "gsparse/rng.hpp"

namespace gsparse {

SeedNodeSet SeedNodeSet::from_ids(std::vector<NodeId> ids, NodeId num_nodes) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (!ids.empty() && ids.back() >= num_nodes) {
    throw Error(ErrorKind::kValidation, "seed node " + std::to_string(ids.back()) +
                                            " >= num_nodes=" + std::to_string(num_nodes));
  }
  SeedNodeSet set;
  set.ids_ = std::move(ids);
  return set;
}

std::uint64_t SeedNodeSet::digest() const noexcept {
  std::uint64_t h = mix64(ids_.size());
  for (const NodeId v : ids_) h = mix64(h ^ v);
  return h;
}

}  // namespace gsparse

namespace gsparse::io {

namespace {

constexpr char kNativeMagic[8] = {'G', 'S', 'P', 'E', 'D', 'G', 'E', '\0'};
constexpr std::uint32_t kNativeVersion = 1;
constexpr std::size_t kNativeHeaderSize = 32;

using Clock = std::chrono::steady_clock;

NodeId checked_id(std::uint64_t value, const std::string& where) {
  if (value >= kMaxNodes) {
    throw Error(ErrorKind::kCapacity, where + ": node id " + std::to_string(value) +
                                          " does not fit a 32-bit node index");
  }
  return static_cast<NodeId>(value);
}

// --- CSV ---------------------------------------------------------------------

bool is_space(char c) { return c == ' ' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool looks_numeric(std::string_view token) {
  token = trim(token);
  if (!token.empty() && (token.front() == '-' || token.front() == '+')) token.remove_prefix(1);
  return !token.empty() && std::all_of(token.begin(), token.end(),
                                       [](char c) { return c >= '0' && c <= '9'; });
}

[[noreturn]] void parse_error(const std::filesystem::path& path, std::size_t line,
                              const std::string& what) {
  throw Error(ErrorKind::kParse,
              path.string() + ":" + std::to_string(line) + ": " + what);
}

std::uint64_t parse_field(std::string_view token, const std::filesystem::path& path,
                          std::size_t line) {
  token = trim(token);
  if (!token.empty() && token.front() == '-') parse_error(path, line, "negative node id");
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw Error(ErrorKind::kCapacity, path.string() + ":" + std::to_string(line) +
                                          ": node id overflows 64 bits");
  }
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    parse_error(path, line, "expected an integer node id, got '" + std::string(token) + "'");
  }
  return value;
}

RawEdges read_csv(const std::filesystem::path& path) {
  const std::string text = detail::read_file(path);
  RawEdges raw;
  std::string_view rest(text);
  std::size_t line_no = 0;
  bool first_content = true;
  while (!rest.empty()) {
    const auto eol = rest.find('\n');
    std::string_view line = rest.substr(0, eol);
    rest.remove_prefix(eol == std::string_view::npos ? rest.size() : eol + 1);
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;

    const auto sep = line.find_first_of(",\t");
    if (sep == std::string_view::npos) parse_error(path, line_no, "expected two columns");
    const std::string_view first = line.substr(0, sep);
    const std::string_view second = line.substr(sep + 1);
    if (first_content) {
      first_content = false;
      if (!looks_numeric(first)) continue;  // header line
    }
    if (second.find_first_of(",\t") != std::string_view::npos) {
      parse_error(path, line_no, "expected exactly two columns");
    }
    const std::string where = path.string() + ":" + std::to_string(line_no);
    raw.src.push_back(checked_id(parse_field(first, path, line_no), where));
    raw.dst.push_back(checked_id(parse_field(second, path, line_no), where));
  }
  return raw;
}

void write_csv(const Graph& g, const std::filesystem::path& path) {
  std::string out;
  out.reserve(g.num_edges() * 16);
  char buf[24];
  for (const Edge& e : g.edges()) {
    auto end = std::to_chars(buf, buf + sizeof buf, e.u).ptr;
    out.append(buf, end);
    out.push_back(',');
    end = std::to_chars(buf, buf + sizeof buf, e.v).ptr;
    out.append(buf, end);
    out.push_back('\n');
  }
  detail::write_file(path, out);
}

// --- paired .npy arrays ----------------------------------------------------

std::vector<NodeId> to_node_ids(const std::vector<std::int64_t>& values,
                                const std::filesystem::path& path) {
  std::vector<NodeId> ids(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) {
      throw Error(ErrorKind::kFormat, path.string() + ": negative node id at index " +
                                          std::to_string(i));
    }
    ids[i] = checked_id(static_cast<std::uint64_t>(values[i]), path.string());
  }
  return ids;
}

RawEdges read_paired(const std::vector<std::filesystem::path>& paths) {
  if (paths.size() != 2) {
    throw Error(ErrorKind::kValidation,
                "paired-array input needs exactly two files (source, destination)");
  }
  RawEdges raw;
  raw.src = to_node_ids(read_npy_ints(paths[0]), paths[0]);
  raw.dst = to_node_ids(read_npy_ints(paths[1]), paths[1]);
  if (raw.src.size() != raw.dst.size()) {
    throw Error(ErrorKind::kFormat, "source array " + paths[0].string() + " has " +
                                        std::to_string(raw.src.size()) +
                                        " entries but destination array " +
                                        paths[1].string() + " has " +
                                        std::to_string(raw.dst.size()));
  }
  return raw;
}

void write_paired(const Graph& g, const std::filesystem::path& stem) {
  const auto paths = paired_array_paths(stem);
  std::vector<std::int64_t> column(g.num_edges());
  std::transform(g.edges().begin(), g.edges().end(), column.begin(),
                 [](const Edge& e) { return static_cast<std::int64_t>(e.u); });
  write_npy_ints(paths[0], column);
  std::transform(g.edges().begin(), g.edges().end(), column.begin(),
                 [](const Edge& e) { return static_cast<std::int64_t>(e.v); });
  write_npy_ints(paths[1], column);
}

// --- native ------------------------------------------------------------------

template <class T>
void put(std::string& out, T value) {
  char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  out.append(bytes, sizeof(T));
}

template <class T>
T get(const std::string& in, std::size_t offset) {
  T value;
  std::memcpy(&value, in.data() + offset, sizeof(T));
  return value;
}

RawEdges read_native(const std::filesystem::path& path) {
  const std::string bytes = detail::read_file(path);
  auto bad = [&](const std::string& what) -> Error {
    return Error(ErrorKind::kFormat, path.string() + ": " + what);
  };
  if (bytes.size() < kNativeHeaderSize || std::memcmp(bytes.data(), kNativeMagic, 8) != 0) {
    throw bad("not a native edge-list file (bad magic)");
  }
  if (const auto version = get<std::uint32_t>(bytes, 8); version != kNativeVersion) {
    throw bad("unsupported native edge-list version " + std::to_string(version));
  }
  const auto num_nodes = get<std::uint64_t>(bytes, 16);
  const auto num_edges = get<std::uint64_t>(bytes, 24);
  if (num_nodes > kMaxNodes) throw bad("node count exceeds the 32-bit node index");
  if ((bytes.size() - kNativeHeaderSize) / 8 != num_edges ||
      (bytes.size() - kNativeHeaderSize) % 8 != 0) {
    throw bad("payload size does not match edge count " + std::to_string(num_edges));
  }
  RawEdges raw;
  raw.num_nodes = static_cast<NodeId>(num_nodes);
  raw.src.resize(num_edges);
  raw.dst.resize(num_edges);
  if (num_edges > 0) {
    std::memcpy(raw.src.data(), bytes.data() + kNativeHeaderSize, num_edges * 4);
    std::memcpy(raw.dst.data(), bytes.data() + kNativeHeaderSize + num_edges * 4, num_edges * 4);
  }
  return raw;
}

void write_native(const Graph& g, const std::filesystem::path& path) {
  std::string out;
  out.reserve(kNativeHeaderSize + g.num_edges() * 8);
  out.append(kNativeMagic, 8);
  put<std::uint32_t>(out, kNativeVersion);
  put<std::uint32_t>(out, 0);
  put<std::uint64_t>(out, g.num_nodes());
  put<std::uint64_t>(out, g.num_edges());
  for (const Edge& e : g.edges()) put<std::uint32_t>(out, e.u);
  for (const Edge& e : g.edges()) put<std::uint32_t>(out, e.v);
  detail::write_file(path, out);
}

}  // namespace

std::string_view format_name(Format format) {
  switch (format) {
    case Format::kCsvEdgeList: return "csv";
    case Format::kPairedArrays: return "npy";
    case Format::kNativeEdgeList: return "native";
  }
  return "csv";
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::kCsvEdgeList;
  if (name == "npy") return Format::kPairedArrays;
  if (name == "native") return Format::kNativeEdgeList;
  throw Error(ErrorKind::kValidation,
              "unknown graph format '" + std::string(name) + "' (expected csv, npy or native)");
}

Format format_from_extension(const std::filesystem::path& path) {
  const auto ext = path.extension();
  if (ext == ".npy") return Format::kPairedArrays;
  if (ext == ".gse" || ext == ".bin") return Format::kNativeEdgeList;
  return Format::kCsvEdgeList;
}

std::vector<std::filesystem::path> paired_array_paths(const std::filesystem::path& stem) {
  return {std::filesystem::path(stem.string() + "_src.npy"),
          std::filesystem::path(stem.string() + "_dst.npy")};
}

RawEdges read_raw(const InputSpec& spec) {
  if (spec.format != Format::kPairedArrays && spec.paths.size() != 1) {
    throw Error(ErrorKind::kValidation, std::string(format_name(spec.format)) +
                                            " input takes exactly one file");
  }
  switch (spec.format) {
    case Format::kCsvEdgeList: return read_csv(spec.paths[0]);
    case Format::kPairedArrays: return read_paired(spec.paths);
    case Format::kNativeEdgeList: return read_native(spec.paths[0]);
  }
  throw Error(ErrorKind::kValidation, "unknown input format");
}

Canonicalized to_graph(const RawEdges& raw, std::optional<std::uint64_t> num_nodes) {
  std::uint64_t n = 0;
  if (num_nodes) {
    n = *num_nodes;
  } else if (raw.num_nodes) {
    n = *raw.num_nodes;
  } else {
    for (std::size_t i = 0; i < raw.src.size(); ++i) {
      n = std::max<std::uint64_t>(n, std::max(raw.src[i], raw.dst[i]) + std::uint64_t{1});
    }
  }
  if (n > kMaxNodes) {
    throw Error(ErrorKind::kCapacity,
                "node count " + std::to_string(n) + " exceeds the 32-bit node index");
  }
  return canonicalize(raw.src, raw.dst, static_cast<NodeId>(n));
}

Loaded load_graph(const InputSpec& spec) {
  const auto t0 = Clock::now();
  const RawEdges raw = read_raw(spec);
  const auto t1 = Clock::now();
  auto canon = to_graph(raw, spec.num_nodes);
  const auto t2 = Clock::now();

  Loaded out{std::move(canon.graph), {}};
  out.stats.raw_edges = canon.stats.raw_edges;
  out.stats.self_loops_dropped = canon.stats.self_loops_dropped;
  out.stats.duplicates_collapsed = canon.stats.duplicates_collapsed;
  out.stats.read_time = t1 - t0;
  out.stats.canonicalize_time = t2 - t1;
  out.stats.load_time = t2 - t0;
  return out;
}

void save_graph(const Graph& g, const std::filesystem::path& path, Format format) {
  switch (format) {
    case Format::kCsvEdgeList: write_csv(g, path); return;
    case Format::kPairedArrays: write_paired(g, path); return;
    case Format::kNativeEdgeList: write_native(g, path); return;
  }
}

SeedNodeSet load_seed_nodes(const std::filesystem::path& path, NodeId num_nodes) {
  const std::string text = detail::read_file(path);
  std::vector<NodeId> ids;
  std::string_view rest(text);
  std::size_t line_no = 0;
  while (!rest.empty()) {
    const auto eol = rest.find('\n');
    const std::string_view line = trim(rest.substr(0, eol));
    rest.remove_prefix(eol == std::string_view::npos ? rest.size() : eol + 1);
    ++line_no;
    if (line.empty()) continue;
    const std::uint64_t id = parse_field(line, path, line_no);
    if (id >= num_nodes) {
      throw Error(ErrorKind::kValidation, path.string() + ":" + std::to_string(line_no) +
                                              ": seed node " + std::to_string(id) +
                                              " >= num_nodes=" + std::to_string(num_nodes));
    }
    ids.push_back(static_cast<NodeId>(id));
  }
  return SeedNodeSet::from_ids(std::move(ids), num_nodes);
}

}  // namespace gsparse::io
