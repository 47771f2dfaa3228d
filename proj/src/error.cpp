#include "gds/error.hpp"

namespace gds {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroDivisorInField: return "ZeroDivisorInField";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotMonicInZ: return "NotMonicInZ";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::WrongVariables: return "WrongVariables";
    case ErrorKind::SurfaceMismatch: return "SurfaceMismatch";
    case ErrorKind::RelationViolated: return "RelationViolated";
    case ErrorKind::NotAnLND: return "NotAnLND";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::NotCentered: return "NotCentered";
    case ErrorKind::NotRootOfUnity: return "NotRootOfUnity";
    case ErrorKind::PhiDependsOnX: return "PhiDependsOnX";
    case ErrorKind::NotInvertibleRecord: return "NotInvertibleRecord";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorKind kind, const std::string& detail) {
  std::string msg(to_string(kind));
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(format_message(kind, detail)), kind_(kind), detail_(detail) {}

ParseError::ParseError(const std::string& detail, std::size_t line, std::size_t column)
    : Error(ErrorKind::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + detail),
      line_(line),
      column_(column) {}

}  // namespace gds
