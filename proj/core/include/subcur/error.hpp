#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subcur {

enum class ErrorKind {
  Parse,
  AlphabetMismatch,
  TrivialSubgroup,
  EmptyCore,
  NotConnected,
  NotSubgroup,
  RetryLimit,
  SizeLimit,
  MismatchBug,
  NotAutomorphism,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. The kind is stable and is what
/// callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace subcur
