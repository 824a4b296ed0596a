#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qseries {

enum class ErrorKind {
  DivisionByZero,
  NotRepresentable,
  NotInvertible,
  FractionalExponent,
  OrderTooSmall,
  InvalidArgument,
  UnknownIdentity,
  BackendMismatch,
  NonConvergent,
  LexError,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Byte range [start, end) into a DSL input.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

/// Every failure raised by the library carries one of the kinds above.
/// DSL errors additionally carry the span of the offending token or node.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  Error(ErrorKind kind, const std::string& what, SourceSpan span);

  ErrorKind kind() const noexcept { return kind_; }
  bool has_span() const noexcept { return has_span_; }
  SourceSpan span() const noexcept { return span_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
  bool has_span_ = false;
  SourceSpan span_{};
};

}  // namespace qseries
