#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "braidchart/chart.hpp"

namespace braidchart {

struct SignedCount {
  std::int64_t plus = 0;
  std::int64_t minus = 0;

  std::int64_t difference() const { return plus - minus; }
  std::int64_t& operator[](Sign s) { return s == Sign::plus ? plus : minus; }
  std::int64_t operator[](Sign s) const { return s == Sign::plus ? plus : minus; }
  bool empty() const { return plus == 0 && minus == 0; }

  friend bool operator==(const SignedCount&, const SignedCount&) = default;
};

// Index -> (plus, minus). Absent keys count as zero.
using SignedTable = std::map<int, SignedCount>;
using CountTable = std::map<int, std::int64_t>;

SignedCount lookup(const SignedTable& table, int index);
std::int64_t lookup(const CountTable& table, int index);

/// Exact singularity census of a chart, keyed by index.
///
/// `branch`, `triple` and `singular` hold the signed counts of black, white
/// and singular vertices; `arcs` counts open double arcs (chains between
/// non-crossing vertices) per label and `loops` closed ones.
struct Census {
  SignedTable branch;
  SignedTable triple;
  SignedTable singular;
  CountTable arcs;
  CountTable loops;

  // Drops zero entries so equal censuses compare equal.
  Census normalized() const;
  Census sign_swapped() const;
  Census shifted(int shift) const;
  Census& operator+=(const Census& other);

  friend bool operator==(const Census& a, const Census& b);
};

SignedTable normalized(const SignedTable& table);
CountTable normalized(const CountTable& table);

// Branch and triple indices are labels; a white vertex takes the larger of its
// two labels; a singular vertex its common label. Crossings have neither.
int vertex_index(const Chart& chart, std::size_t v);
Sign vertex_sign(const Chart& chart, std::size_t v);

enum class ArcKind { chain, loop };

struct ArcEndpoint {
  std::size_t vertex = 0;
  EdgeEnd end;
};

struct Arc {
  int label = 0;
  std::vector<std::size_t> edges;
  ArcKind kind = ArcKind::chain;
  std::optional<ArcEndpoint> start;
  std::optional<ArcEndpoint> finish;
};

// Follows double arcs straight through crossing vertices. Throws
// precondition when the chart's crossings are malformed.
std::vector<Arc> trace_arcs(const Chart& chart);

Census census(const Chart& chart);

// Arc starts and ends predicted from vertex counts for label p.
std::int64_t predicted_arc_starts(const Census& census, int p);
std::int64_t predicted_arc_ends(const Census& census, int p);

// Every label that any count in the census can touch.
std::vector<int> census_labels(const Census& census);

bool check_edge_count(const Census& census);

}  // namespace braidchart
