#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "braidchart/census.hpp"
#include "braidchart/chart.hpp"

namespace braidchart {

/// Prescribed signed counts of branch, triple and singular points.
struct TargetCounts {
  SignedTable branch;
  SignedTable triple;
  SignedTable singular;

  TargetCounts normalized() const;
  Census as_census() const;

  friend bool operator==(const TargetCounts& a, const TargetCounts& b);
};

TargetCounts targets_of(const Census& census);

struct LedgerEnd {
  VertexKind kind = VertexKind::black;
  int index = 0;
  Sign sign = Sign::plus;
  std::size_t ordinal = 0;  // instance number among vertices of this kind/index/sign
  std::size_t slot = 0;     // position in the vertex's rotation
};

/// Edge ends contributed per label by the vertex multiset of a target.
struct EndLedger {
  std::map<int, std::vector<LedgerEnd>> outgoing;
  std::map<int, std::vector<LedgerEnd>> incoming;

  std::vector<int> imbalanced_labels() const;
  bool balanced() const { return imbalanced_labels().empty(); }
};

EndLedger build_ledger(const TargetCounts& targets);

// Adds the fewest branch points that make the balance law hold for the given
// triple and singular counts.
TargetCounts plan_targets(const SignedTable& triple, const SignedTable& singular = {});

struct NormalizedTargets {
  TargetCounts targets;
  int shift = 0;
  int degree = 1;
};

// Translates indices so the smallest label in use is 1. A triple point of
// index q uses labels q-1 and q.
NormalizedTargets normalize_targets(const TargetCounts& targets);

enum class GadgetKind { wp, sp, fe };

struct PeeledGadget {
  GadgetKind kind = GadgetKind::fe;
  int index = 0;
};

struct PeelPlan {
  std::vector<PeeledGadget> gadgets;
  TargetCounts residual;
};

// Greedy extraction of self-contained gadgets: opposite-sign white pairs,
// opposite-sign singular pairs, and branch pairs no white or singular end
// could ever absorb. Gadget counts plus the residual always sum to the input.
PeelPlan peel_gadgets(const TargetCounts& targets);
Census gadget_census(const PeeledGadget& gadget);

struct RealizeOptions {
  std::uint64_t budget = 1'000'000;  // backtracking nodes per search pass
  bool allow_crossings = true;       // second pass may insert crossing vertices
  bool crossings_from_start = false;
  bool routes_first = false;  // try crossing routes before direct wiring
  bool emit_coords = true;
};

struct RealizeStats {
  std::uint64_t nodes = 0;
  std::size_t crossings_inserted = 0;
  std::size_t gadgets = 0;
  std::size_t residual_vertices = 0;
  bool crossing_pass = false;
};

struct Realization {
  Chart chart;
  int shift = 0;  // chart indices = target indices + shift
  RealizeStats stats;
};

// Synthesizes a valid chart whose branch/triple/singular census equals the
// (shifted) targets. Throws star-violation when the balance law fails and
// budget-exhausted when no wiring was found; never returns an invalid chart.
Realization realize(const TargetCounts& targets, const RealizeOptions& options = {});

bool verify_realization(const TargetCounts& targets, const Chart& chart, int shift = 0);

}  // namespace braidchart
