#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsparse {

enum class ErrorKind {
  kOutOfRange,  // node id outside [0, num_nodes)
  kParse,       // malformed text input
  kFormat,      // structurally invalid binary input or array-length mismatch
  kCapacity,    // value does not fit the index types
  kValidation,  // invalid configuration or arguments
  kIo,          // filesystem failure
};

/// Class name printed by the CLI and carried through the array boundary,
/// e.g. "ValidationError".
std::string_view error_class(ErrorKind kind);

/// The toolkit's single exception type; `kind()` selects the error class.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gsparse
