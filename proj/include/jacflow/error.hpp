#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jacflow {

enum class ErrorKind {
  InvalidGraph,
  Disconnected,
  SemiedgePresent,
  LoopOrSemiedgePresent,
  NotASpanningTree,
  ScaleExceeded,
  NotSquare,
  DimensionMismatch,
  InvalidGroup,
  NotAnAutomorphism,
  NotSemiregular,
  InvalidVoltage,
  NotACovering,
  NotXiInvariant,
  IdentityInConnection,
  NotInverseClosed,
  HypothesisUnmet,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so that callers (the CLI
// in particular) can map it onto a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace jacflow
