#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cgq {

enum class ErrorKind {
  InvalidArgument,
  SingularMatrix,
  UnknownWeight,
  InvalidParameter,
  DuplicateName,
  IllConditioned,
  NegativeVariance,
  EmptyIntersection,
  BracketCountMismatch,
  NoConvergence,
  NonPositiveWeight,
  RungFailed,
  LadderInconclusive,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// that callers (the ladder, the CLI) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace cgq
