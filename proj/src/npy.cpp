#include <bit>
#include <cstring>
#include <fstream>
#include <string>

#include "file_util.hpp"
#include "gsparse/error.hpp"
#include "gsparse/io.hpp"

namespace gsparse::io {

static_assert(std::endian::native == std::endian::little,
              "binary formats are read and written in host order");

namespace {

constexpr char kMagic[] = "\x93NUMPY";
constexpr std::size_t kMagicSize = 6;

[[noreturn]] void bad(const std::filesystem::path& path, const std::string& what) {
  throw Error(ErrorKind::kFormat, path.string() + ": " + what);
}

// Value of `key` in the header dict, up to the next top-level comma or brace.
std::string dict_value(const std::string& header, const std::string& key,
                       const std::filesystem::path& path) {
  const std::string quoted = "'" + key + "'";
  auto pos = header.find(quoted);
  if (pos == std::string::npos) bad(path, "npy header lacks " + quoted);
  pos = header.find(':', pos + quoted.size());
  if (pos == std::string::npos) bad(path, "npy header malformed near " + quoted);
  ++pos;
  while (pos < header.size() && header[pos] == ' ') ++pos;
  std::size_t end = pos;
  if (end < header.size() && header[end] == '(') {
    end = header.find(')', end);
    if (end == std::string::npos) bad(path, "npy shape tuple not closed");
    ++end;
  } else {
    while (end < header.size() && header[end] != ',' && header[end] != '}') ++end;
  }
  auto value = header.substr(pos, end - pos);
  while (!value.empty() && value.back() == ' ') value.pop_back();
  return value;
}

std::uint64_t parse_length(const std::string& shape, const std::filesystem::path& path) {
  // Accept "(N,)" and "(N)"; anything else is not a 1-D array.
  std::string inner = shape.substr(1, shape.size() - 2);
  std::erase(inner, ' ');
  if (!inner.empty() && inner.back() == ',') inner.pop_back();
  if (inner.empty() || inner.find(',') != std::string::npos) {
    bad(path, "expected a 1-D array, found shape " + shape);
  }
  std::uint64_t n = 0;
  for (const char c : inner) {
    if (c < '0' || c > '9') bad(path, "invalid npy shape " + shape);
    n = n * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return n;
}

}  // namespace

std::vector<std::int64_t> read_npy_ints(const std::filesystem::path& path) {
  const std::string bytes = detail::read_file(path);
  if (bytes.size() < kMagicSize + 4 || bytes.compare(0, kMagicSize, kMagic, kMagicSize) != 0) {
    bad(path, "not an npy file (bad magic)");
  }
  const auto major = static_cast<unsigned char>(bytes[6]);
  std::size_t header_len = 0;
  std::size_t header_start = 0;
  if (major == 1) {
    header_len = static_cast<unsigned char>(bytes[8]) |
                 (static_cast<std::size_t>(static_cast<unsigned char>(bytes[9])) << 8);
    header_start = 10;
  } else if (major == 2 || major == 3) {
    if (bytes.size() < 12) bad(path, "truncated npy header");
    std::uint32_t len = 0;
    std::memcpy(&len, bytes.data() + 8, 4);
    header_len = len;
    header_start = 12;
  } else {
    bad(path, "unsupported npy version " + std::to_string(major));
  }
  if (bytes.size() < header_start + header_len) bad(path, "truncated npy header");
  const std::string header = bytes.substr(header_start, header_len);

  const std::string descr = dict_value(header, "descr", path);
  std::size_t width = 0;
  if (descr == "'<i8'") {
    width = 8;
  } else if (descr == "'<i4'") {
    width = 4;
  } else {
    bad(path, "unsupported dtype " + descr + " (expected '<i4' or '<i8')");
  }
  const std::uint64_t count = parse_length(dict_value(header, "shape", path), path);

  const std::size_t data_start = header_start + header_len;
  if ((bytes.size() - data_start) / width < count) bad(path, "npy data shorter than its shape");

  std::vector<std::int64_t> values(count);
  const char* data = bytes.data() + data_start;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (width == 8) {
      std::memcpy(&values[i], data + i * 8, 8);
    } else {
      std::int32_t v = 0;
      std::memcpy(&v, data + i * 4, 4);
      values[i] = v;
    }
  }
  return values;
}

void write_npy_ints(const std::filesystem::path& path, std::span<const std::int64_t> values) {
  std::string header = "{'descr': '<i8', 'fortran_order': False, 'shape': (" +
                       std::to_string(values.size()) + ",), }";
  // Pad so that magic + version + length + header is a multiple of 64 bytes.
  const std::size_t unpadded = kMagicSize + 2 + 2 + header.size() + 1;
  header.append((64 - unpadded % 64) % 64, ' ');
  header.push_back('\n');

  std::string out(kMagic, kMagicSize);
  out.push_back('\x01');
  out.push_back('\x00');
  out.push_back(static_cast<char>(header.size() & 0xff));
  out.push_back(static_cast<char>((header.size() >> 8) & 0xff));
  out += header;
  const std::size_t data_start = out.size();
  out.resize(data_start + values.size() * 8);
  if (!values.empty()) std::memcpy(out.data() + data_start, values.data(), values.size() * 8);
  detail::write_file(path, out);
}

}  // namespace gsparse::io
