#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mulx {

enum class errc {
  malformed_input,
  parse_error,
  not_regular,
  not_regular_component,
  not_kleshchev,
  not_in_crystal,
  dead_end,
  invalid_m,
  not_a_symbol,
  match_exhausted,
  no_stabilization,
  index_out_of_range,
  resource_limit,
};

std::string_view to_string(errc code);

/// Domain error with a stable machine-readable code. `detail` carries the
/// step index for dead_end and the byte offset for parse_error; -1 otherwise.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message, long long detail = -1)
      : std::runtime_error(message), code_(code), detail_(detail) {}

  errc code() const noexcept { return code_; }
  long long detail() const noexcept { return detail_; }

 private:
  errc code_;
  long long detail_;
};

[[noreturn]] inline void fail(errc code, const std::string& message, long long detail = -1) {
  throw Error(code, message, detail);
}

// Invariant that only an implementation bug can break.
inline void internal_check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

}  // namespace mulx
