#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fraxform {

/// Broad failure classes. The numeric values double as CLI exit codes.
enum class ErrorCategory : int {
  parse = 2,
  unsupported = 3,
  numeric = 4,
  identity = 5,
};

enum class ErrorKind {
  // parse
  syntax,
  unknown_identifier,
  non_positive_rate,
  missing_initial_condition,
  // unsupported method / out of table
  unsupported_order,
  alpha_mismatch,
  unsupported_multiplicity,
  resonance,
  parity,
  improper,
  kind_mismatch,
  out_of_table,
  irrational_rate,
  unsupported_semantics,
  representation,
  invalid_argument,
  // numeric
  domain,
  precision,
  truncation,
  accuracy,
  // identity
  identity_failure,
};

ErrorCategory category_of(ErrorKind kind);
std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  ErrorCategory category() const noexcept { return category_of(kind_); }

 private:
  ErrorKind kind_;
};

/// Byte offsets [begin, end) into the parsed text.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, SourceSpan span, const std::string& message)
      : Error(kind, message), span_(span) {}

  SourceSpan span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

}  // namespace fraxform
