#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace preproj {

enum class ErrorKind {
  invalid_input,
  not_applicable,
  inconsistent_input,
  unclassifiable,
  theorem_violation,
  internal,
};

std::string_view to_string(ErrorKind kind);

/// Library-wide exception; `kind` drives the CLI status and exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace preproj
