#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "braidchart/chart.hpp"

namespace braidchart {

struct GenConfig {
  std::uint64_t seed = 1;
  int degree = 5;
  std::size_t target_vertices = 20;
  bool allow_singular = false;
  bool black_free = false;
  std::size_t splice_attempts = 64;
};

/// Seeded random valid chart. A soup of catalog gadgets (fe, sw, wp, xg, xx,
/// sp, sb) with random indices and signs is rewired by random splice and
/// merge_blacks passes. Randomness comes from std::mt19937_64 seeded with
/// `seed`, so equal configs give identical charts with one standard library.
/// Black-free mode draws only from wp, xx and sp and never merges.
Chart generate(const GenConfig& config);

// Cross-reconnects two same-label edges: tail(e1) -> head(e2) and
// tail(e2) -> head(e1). Returns nullopt when the result is not sphere-planar.
std::optional<Chart> splice(const Chart& chart, std::size_t e1, std::size_t e2);

// Removes a positive and a negative black of equal label and fuses their two
// edges into one. Returns nullopt when both blacks sit on the same edge or
// the fused chart is not sphere-planar.
std::optional<Chart> merge_blacks(const Chart& chart, std::size_t positive, std::size_t negative);

}  // namespace braidchart
