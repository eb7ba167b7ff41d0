#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace uchain {

enum class ErrorKind {
  // scalar arithmetic
  ExponentOverflow,
  NotAUnit,
  BothZero,
  NotInRing,
  // complexes and maps
  DifferentialNotSquareZero,
  GradingViolation,
  DuplicateGenerator,
  UnknownGenerator,
  NotAChainMap,
  DegreeMismatch,
  ComplexMismatch,
  // homology / duality preconditions
  RankTooLarge,
  NotACycle,
  NotACycleInPlus,
  NotInImage,
  InfinityNotZero,
  NotUFree,
  ParameterOutOfRange,
  // input
  ParseError,
  // cross-check mismatch between two independent routes
  InternalCheck,
};

// Coarse classes used to choose CLI exit codes.
enum class ErrorCategory { Validation, Precondition, Parse, Internal };

std::string_view to_string(ErrorKind kind);
ErrorCategory category(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

// Parse errors carry a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace uchain
