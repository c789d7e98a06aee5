#include "braidchart/error.hpp"

namespace braidchart {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::unknown_kind: return "unknown-kind";
    case ErrorKind::duplicate_id: return "duplicate-id";
    case ErrorKind::dangling_reference: return "dangling-reference";
    case ErrorKind::arity_mismatch: return "arity-mismatch";
    case ErrorKind::label_out_of_range: return "label-out-of-range";
    case ErrorKind::no_index: return "no-index";
    case ErrorKind::no_sign: return "no-sign";
    case ErrorKind::window_too_small: return "window-too-small";
    case ErrorKind::star_violation: return "star-violation";
    case ErrorKind::budget_exhausted: return "budget-exhausted";
    case ErrorKind::infeasible_config: return "infeasible-config";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::no_layout: return "no-layout-available";
    case ErrorKind::inconsistent_diagram: return "inconsistent-diagram";
    case ErrorKind::usage: return "usage";
  }
  return "unknown";
}

}  // namespace braidchart
