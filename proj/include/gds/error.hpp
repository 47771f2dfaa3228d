#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gds {

// Every failure the library reports carries one of these kinds; the CLI
// prints the kind name verbatim.
enum class ErrorKind {
  DivisionByZero,
  ZeroDivisorInField,
  FieldMismatch,
  NotDivisible,
  NotMonicInZ,
  DegreeTooSmall,
  NotMonic,
  WrongVariables,
  SurfaceMismatch,
  RelationViolated,
  NotAnLND,
  NotApplicable,
  NotCentered,
  NotRootOfUnity,
  PhiDependsOnX,
  NotInvertibleRecord,
  ZeroPolynomial,
  ZeroElement,
  InvalidArgument,
  ParseError,
  InternalError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& detail, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace gds
