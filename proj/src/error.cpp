#include "jacflow/error.hpp"

namespace jacflow {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::SemiedgePresent: return "SemiedgePresent";
    case ErrorKind::LoopOrSemiedgePresent: return "LoopOrSemiedgePresent";
    case ErrorKind::NotASpanningTree: return "NotASpanningTree";
    case ErrorKind::ScaleExceeded: return "ScaleExceeded";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidGroup: return "InvalidGroup";
    case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorKind::NotSemiregular: return "NotSemiregular";
    case ErrorKind::InvalidVoltage: return "InvalidVoltage";
    case ErrorKind::NotACovering: return "NotACovering";
    case ErrorKind::NotXiInvariant: return "NotXiInvariant";
    case ErrorKind::IdentityInConnection: return "IdentityInConnection";
    case ErrorKind::NotInverseClosed: return "NotInverseClosed";
    case ErrorKind::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace jacflow
