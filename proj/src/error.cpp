#include "satlab/error.hpp"

namespace satlab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidTerm: return "InvalidTerm";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::MalformedCut: return "MalformedCut";
    case ErrorCode::EmptyOrderBetween: return "EmptyOrderBetween";
    case ErrorCode::NotSubset: return "NotSubset";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::BaseTooSmall: return "BaseTooSmall";
    case ErrorCode::NoSeparatingPoint: return "NoSeparatingPoint";
    case ErrorCode::MalformedInterval: return "MalformedInterval";
    case ErrorCode::LoopQuery: return "LoopQuery";
    case ErrorCode::MalformedGraph: return "MalformedGraph";
    case ErrorCode::MalformedDigraph: return "MalformedDigraph";
    case ErrorCode::IncompleteOrdering: return "IncompleteOrdering";
    case ErrorCode::NoAdmissibleVertex: return "NoAdmissibleVertex";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::CyclicInput: return "CyclicInput";
    case ErrorCode::RealizerFailure: return "RealizerFailure";
    case ErrorCode::NotExtensional: return "NotExtensional";
    case ErrorCode::ExtenderExhausted: return "ExtenderExhausted";
    case ErrorCode::InvalidExtender: return "InvalidExtender";
    case ErrorCode::SeparationFailure: return "SeparationFailure";
  }
  return "Unknown";
}

}  // namespace satlab
