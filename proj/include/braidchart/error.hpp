#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace braidchart {

enum class ErrorKind {
  syntax,
  unknown_kind,
  duplicate_id,
  dangling_reference,
  arity_mismatch,
  label_out_of_range,
  no_index,
  no_sign,
  window_too_small,
  star_violation,
  budget_exhausted,
  infeasible_config,
  precondition,
  no_layout,
  inconsistent_diagram,
  usage,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; `kind()` is the machine-readable
// error class used by the CLI reports.
class ChartError : public std::runtime_error {
 public:
  ChartError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace braidchart
