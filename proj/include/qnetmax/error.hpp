#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qnetmax {

enum class ErrorKind {
  NotHermitian,
  TraceNotOne,
  NotPSD,
  ParameterOutOfRange,
  EmptyNetwork,
  MissingInputTuple,
  SettingsArityMismatch,
  NoConvergence,
  UnknownSuite,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every failure raised by the library. The message names
/// the violated invariant and, where one exists, the measured residual.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qnetmax
