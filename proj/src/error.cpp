#include "uchain/error.hpp"

namespace uchain {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::NotInRing: return "NotInRing";
    case ErrorKind::DifferentialNotSquareZero: return "DifferentialNotSquareZero";
    case ErrorKind::GradingViolation: return "GradingViolation";
    case ErrorKind::DuplicateGenerator: return "DuplicateGenerator";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::NotAChainMap: return "NotAChainMap";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::ComplexMismatch: return "ComplexMismatch";
    case ErrorKind::RankTooLarge: return "RankTooLarge";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::NotACycleInPlus: return "NotACycleInPlus";
    case ErrorKind::NotInImage: return "NotInImage";
    case ErrorKind::InfinityNotZero: return "InfinityNotZero";
    case ErrorKind::NotUFree: return "NotUFree";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalCheck: return "InternalCheck";
  }
  return "Unknown";
}

ErrorCategory category(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
      return ErrorCategory::Parse;
    case ErrorKind::DifferentialNotSquareZero:
    case ErrorKind::GradingViolation:
    case ErrorKind::DuplicateGenerator:
    case ErrorKind::UnknownGenerator:
    case ErrorKind::NotAChainMap:
    case ErrorKind::ExponentOverflow:
      return ErrorCategory::Validation;
    case ErrorKind::InternalCheck:
      return ErrorCategory::Internal;
    default:
      return ErrorCategory::Precondition;
  }
}

}  // namespace uchain
