#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidchart/census.hpp"
#include "braidchart/chart.hpp"
#include "braidchart/identities.hpp"
#include "braidchart/realizer.hpp"

namespace braidchart {

struct ChartDocument {
  int version = 1;
  Chart chart;
  std::vector<std::string> comments;  // full `#` lines, in file order

  friend bool operator==(const ChartDocument&, const ChartDocument&) = default;
};

// Line-oriented chart format:
//
//   %chart 1
//   degree <n>
//   vertex <id> black|white|crossing|singular
//   edge <id> <label> <tail> <head>
//   rot <vertex> <edge>:t|h[,<edge>:t|h...]     (counterclockwise)
//   coord <vertex> <x> <y>                       (decimal numbers)
//
// `#` starts a comment line. Errors carry "line N:" and the error class.
ChartDocument parse_chart(std::string_view text);

// Canonical form: header, comments, degree, vertices by id, edges by id,
// rotations by vertex id each starting at its least end, coords by vertex id.
std::string serialize_chart(const ChartDocument& doc);
std::string serialize_chart(const Chart& chart);

// `%targets 1` followed by `B|T|D <index> +|- <count>` lines.
TargetCounts parse_targets(std::string_view text);
std::string serialize_targets(const TargetCounts& targets);

// Weight flag grammar: constant:<c>, linear, triangular,
// explicit:<lo>:<v0,v1,...>, random:<seed>:<k>. Generated sequences span
// the census's required window. Throws usage on malformed specs.
std::vector<std::pair<std::string, WeightSequence>> weights_from_spec(std::string_view spec, const Census& census);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace braidchart
