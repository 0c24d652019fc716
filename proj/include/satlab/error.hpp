#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace satlab {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  InvalidTerm,
  EmptySet,
  MalformedCut,
  EmptyOrderBetween,
  NotSubset,
  BoundTooSmall,
  BaseTooSmall,
  NoSeparatingPoint,
  MalformedInterval,
  LoopQuery,
  MalformedGraph,
  MalformedDigraph,
  IncompleteOrdering,
  NoAdmissibleVertex,
  TooLarge,
  CyclicInput,
  RealizerFailure,
  NotExtensional,
  ExtenderExhausted,
  InvalidExtender,
  SeparationFailure,
};

std::string_view error_code_name(ErrorCode code);

// Domain error raised by every satlab operation. The code is stable and is
// what the CLI reports; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace satlab
