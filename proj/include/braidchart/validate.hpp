#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "braidchart/chart.hpp"

namespace braidchart {

struct Violation {
  std::string subject;  // vertex or edge id, empty for chart-wide rules
  std::string rule;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has_rule(std::string_view rule) const;
};

// Rule names: label-range, white-template, crossing-template,
// crossing-label-gap, singular-template, sphere-planarity.
ValidationReport validate(const Chart& chart);

// Rotation position at which the three consecutive incoming ends of a white
// vertex begin, if its ends split into an incoming and an outgoing block.
std::optional<std::size_t> incoming_block_start(const Chart& chart, std::size_t v);

}  // namespace braidchart
