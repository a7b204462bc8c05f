#include "newtonspec/error.hpp"

namespace newtonspec {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::ConstantTermInLocalMode: return "ConstantTermInLocalMode";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::NotConvenient: return "NotConvenient";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotSimplex: return "NotSimplex";
    case ErrorKind::NotSimplicialFaces: return "NotSimplicialFaces";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::HintNotABasis: return "HintNotABasis";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ReductionFailure: return "ReductionFailure";
    case ErrorKind::NegativeDelta: return "NegativeDelta";
    case ErrorKind::ExponentOutOfRange: return "ExponentOutOfRange";
  }
  return "UnknownError";
}

bool is_consistency_failure(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotFullDimensional:
    case ErrorKind::InternalMismatch:
    case ErrorKind::NoConvergence:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::ReductionFailure:
    case ErrorKind::NegativeDelta:
    case ErrorKind::ExponentOutOfRange:
      return true;
    default:
      return false;
  }
}

}  // namespace newtonspec
