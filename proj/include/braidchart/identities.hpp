#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "braidchart/census.hpp"

namespace braidchart {

struct Fraction {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
};

/// Integer weights x_p on the window [lo, hi].
class WeightSequence {
 public:
  WeightSequence(int lo, std::vector<std::int64_t> values);

  // Rational weights are scaled by the lcm of their denominators; the
  // weighted identities are homogeneous, so the scaling is harmless.
  static WeightSequence from_fractions(int lo, std::span<const Fraction> values);
  static WeightSequence constant(std::int64_t c, int lo, int hi);
  static WeightSequence linear(int lo, int hi);      // x_p = p
  static WeightSequence triangular(int lo, int hi);  // x_p = p(p+1)/2
  static WeightSequence random(std::uint64_t seed, int lo, int hi, std::int64_t magnitude = 1000);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(values_.size()) - 1; }
  bool covers(int p) const { return p >= lo_ && p <= hi(); }
  std::int64_t at(int p) const;  // throws window-too-small
  const std::vector<std::int64_t>& values() const { return values_; }

 private:
  int lo_;
  std::vector<std::int64_t> values_;
};

// y_p = x_p - x_{p-1} for p in (lo, hi]; z_p = 2 x_p.
std::map<int, std::int64_t> derive_y(const WeightSequence& x);
std::map<int, std::int64_t> derive_z(const WeightSequence& x);

// Smallest window a weight sequence must cover for this census:
// [min support - 1, max support] over branch, triple and singular indices.
std::optional<std::pair<int, int>> required_window(const Census& census);

// Sum of sign * x_p * B + sign * y_q * T + sign * z_r * D. Zero for every
// census of a valid chart. Throws window-too-small.
std::int64_t weighted_sum(const Census& census, const WeightSequence& x);

struct StarBalance {
  std::int64_t lhs = 0;  // B(p,+) - B(p,-) + 2 (D(p,+) - D(p,-))
  std::int64_t rhs = 0;  // (T(p+1,+) - T(p+1,-)) - (T(p,+) - T(p,-))
  bool ok() const { return lhs == rhs; }
};

std::map<int, StarBalance> star_balances(const Census& census);
std::map<int, bool> check_star(const Census& census);
bool star_holds(const Census& census);

struct BranchSum {
  std::int64_t lhs = 0;
  bool ok = false;
};

// Signed count of branch points plus twice the signed singular count.
BranchSum corollary_branch_sum(const Census& census);

struct PartialSum {
  std::int64_t triple_difference = 0;
  std::int64_t prefix_sum = 0;
  std::int64_t negated_suffix_sum = 0;
  bool ok = false;
};

std::map<int, PartialSum> corollary_partial_sums(const Census& census);

enum class Applicability { applicable, vacuous };

struct ImmersedResult {
  Applicability applicability = Applicability::vacuous;
  bool holds = true;
};

// Applicable when there are no branch points and singular signs cancel at
// every index; then every index must have as many positive as negative
// triple points.
ImmersedResult corollary_immersed(const Census& census);

struct CorollaryResult {
  std::string claim;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool ok = false;
};

struct IdentityReport {
  bool edge_count_ok = false;
  std::map<int, StarBalance> star;
  std::vector<std::pair<std::string, std::int64_t>> weighted_totals;  // per weight sequence
  std::vector<CorollaryResult> corollaries;
  ImmersedResult immersed;

  bool ok() const;
};

// Named weight sequences are evaluated against the census in order.
IdentityReport verify_identities(const Census& census,
                                 std::span<const std::pair<std::string, WeightSequence>> weights);

}  // namespace braidchart
