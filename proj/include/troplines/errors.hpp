#pragma once

#include <stdexcept>
#include <string>

namespace troplines {

enum class ErrorCode {
  Parse,
  InfiniteEntry,
  EqualPoints,
  IdenticalLines,
  NotTransversal,
  DuplicateLine,
  Empty,
  NotAVertex,
  NotATriangle,
  TilingFailure,
  TooFewPoints,
  GridTooSmall,
  RangeTooSmall,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

/// Single exception type for the library; the code tells callers (and the
/// CLI exit-code mapping) which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace troplines
