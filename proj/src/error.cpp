#include "qseries/error.hpp"

namespace qseries {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::FractionalExponent: return "FractionalExponent";
    case ErrorKind::OrderTooSmall: return "OrderTooSmall";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UnknownIdentity: return "UnknownIdentity";
    case ErrorKind::BackendMismatch: return "BackendMismatch";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::LexError: return "LexError";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

Error::Error(ErrorKind kind, const std::string& what, SourceSpan span)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what + " at bytes " +
                         std::to_string(span.start) + ".." + std::to_string(span.end)),
      kind_(kind),
      detail_(what),
      has_span_(true),
      span_(span) {}

}  // namespace qseries
