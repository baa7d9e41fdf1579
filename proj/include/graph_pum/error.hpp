#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpum {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  DisconnectedGraph,
  NonpositiveWeight,
  SelfLoop,
  NonSymmetric,
  InvalidP,
  DisconnectedSubgraph,
  EmptyNodeSet,
  NodeOutOfRange,
  TooLarge,
  KOutOfRange,
  StartNotInW,
  JTooLarge,
  EmptyCenterSet,
  CombinatorialBlowup,
  NegativeRadius,
  ZeroTotalWeight,
  EpsilonTooSmall,
  SingularSystem,
  EmptyLocalSampleSet,
  ZeroReference,
  BoundViolated,
  InvariantViolation,
  FileNotFound,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace gpum
