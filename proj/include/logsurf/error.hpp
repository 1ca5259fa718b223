#pragma once

#include <stdexcept>
#include <string>

namespace logsurf {

/// A domain failure raised by one of the library operations. `code()` is the
/// stable machine-readable name ("gram-singular", "pa-negative", ...).
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

/// Malformed input file or value (bad JSON, wrong schema, unparsable fraction).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace logsurf
