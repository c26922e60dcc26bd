#include "fraxform/error.hpp"

namespace fraxform {

ErrorCategory category_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::syntax:
    case ErrorKind::unknown_identifier:
    case ErrorKind::non_positive_rate:
    case ErrorKind::missing_initial_condition:
      return ErrorCategory::parse;
    case ErrorKind::domain:
    case ErrorKind::precision:
    case ErrorKind::truncation:
    case ErrorKind::accuracy:
      return ErrorCategory::numeric;
    case ErrorKind::identity_failure:
      return ErrorCategory::identity;
    default:
      return ErrorCategory::unsupported;
  }
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::unknown_identifier: return "unknown-identifier";
    case ErrorKind::non_positive_rate: return "non-positive-rate";
    case ErrorKind::missing_initial_condition: return "missing-initial-condition";
    case ErrorKind::unsupported_order: return "unsupported-order";
    case ErrorKind::alpha_mismatch: return "alpha-mismatch";
    case ErrorKind::unsupported_multiplicity: return "unsupported-multiplicity";
    case ErrorKind::resonance: return "resonance";
    case ErrorKind::parity: return "parity";
    case ErrorKind::improper: return "improper";
    case ErrorKind::kind_mismatch: return "kind-mismatch";
    case ErrorKind::out_of_table: return "out-of-table";
    case ErrorKind::irrational_rate: return "irrational-rate";
    case ErrorKind::unsupported_semantics: return "unsupported-semantics";
    case ErrorKind::representation: return "representation";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::domain: return "domain";
    case ErrorKind::precision: return "precision";
    case ErrorKind::truncation: return "truncation";
    case ErrorKind::accuracy: return "accuracy";
    case ErrorKind::identity_failure: return "identity-failure";
  }
  return "unknown";
}

}  // namespace fraxform
