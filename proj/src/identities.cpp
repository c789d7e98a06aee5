#include "braidchart/identities.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "braidchart/error.hpp"

namespace braidchart {
namespace {

bool has_support(const SignedTable& table) {
  return std::any_of(table.begin(), table.end(), [](const auto& kv) { return !kv.second.empty(); });
}

// Net (B + 2D) signed count at p; the left side of the balance law.
std::int64_t net_branch(const Census& c, int p) {
  return lookup(c.branch, p).difference() + 2 * lookup(c.singular, p).difference();
}

}  // namespace

WeightSequence::WeightSequence(int lo, std::vector<std::int64_t> values) : lo_(lo), values_(std::move(values)) {}

WeightSequence WeightSequence::from_fractions(int lo, std::span<const Fraction> values) {
  std::int64_t scale = 1;
  for (const Fraction& f : values) {
    if (f.denominator == 0) throw ChartError(ErrorKind::precondition, "zero denominator in weight");
    scale = std::lcm(scale, f.denominator < 0 ? -f.denominator : f.denominator);
  }
  std::vector<std::int64_t> scaled;
  scaled.reserve(values.size());
  for (const Fraction& f : values) scaled.push_back(f.numerator * (scale / f.denominator));
  return WeightSequence(lo, std::move(scaled));
}

WeightSequence WeightSequence::constant(std::int64_t c, int lo, int hi) {
  return WeightSequence(lo, std::vector<std::int64_t>(static_cast<std::size_t>(std::max(0, hi - lo + 1)), c));
}

WeightSequence WeightSequence::linear(int lo, int hi) {
  std::vector<std::int64_t> values;
  for (int p = lo; p <= hi; ++p) values.push_back(p);
  return WeightSequence(lo, std::move(values));
}

WeightSequence WeightSequence::triangular(int lo, int hi) {
  std::vector<std::int64_t> values;
  for (int p = lo; p <= hi; ++p) values.push_back(static_cast<std::int64_t>(p) * (p + 1) / 2);
  return WeightSequence(lo, std::move(values));
}

WeightSequence WeightSequence::random(std::uint64_t seed, int lo, int hi, std::int64_t magnitude) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-magnitude, magnitude);
  std::vector<std::int64_t> values;
  for (int p = lo; p <= hi; ++p) values.push_back(dist(rng));
  return WeightSequence(lo, std::move(values));
}

std::int64_t WeightSequence::at(int p) const {
  if (!covers(p)) {
    throw ChartError(ErrorKind::window_too_small, "weight x_" + std::to_string(p) + " outside window [" +
                                                      std::to_string(lo_) + ", " + std::to_string(hi()) + "]");
  }
  return values_[static_cast<std::size_t>(p - lo_)];
}

std::map<int, std::int64_t> derive_y(const WeightSequence& x) {
  if (x.values().empty()) throw ChartError(ErrorKind::window_too_small, "empty weight window");
  std::map<int, std::int64_t> y;
  for (int p = x.lo() + 1; p <= x.hi(); ++p) y[p] = x.at(p) - x.at(p - 1);
  return y;
}

std::map<int, std::int64_t> derive_z(const WeightSequence& x) {
  if (x.values().empty()) throw ChartError(ErrorKind::window_too_small, "empty weight window");
  std::map<int, std::int64_t> z;
  for (int p = x.lo(); p <= x.hi(); ++p) z[p] = 2 * x.at(p);
  return z;
}

std::optional<std::pair<int, int>> required_window(const Census& census) {
  std::optional<std::pair<int, int>> window;
  auto extend = [&](const SignedTable& table) {
    for (const auto& [p, count] : table) {
      if (count.empty()) continue;
      if (!window) {
        window = std::pair{p - 1, p};
      } else {
        window->first = std::min(window->first, p - 1);
        window->second = std::max(window->second, p);
      }
    }
  };
  extend(census.branch);
  extend(census.triple);
  extend(census.singular);
  return window;
}

std::int64_t weighted_sum(const Census& census, const WeightSequence& x) {
  if (auto window = required_window(census)) {
    if (!x.covers(window->first) || !x.covers(window->second)) {
      throw ChartError(ErrorKind::window_too_small,
                       "weights cover [" + std::to_string(x.lo()) + ", " + std::to_string(x.hi()) +
                           "], census needs [" + std::to_string(window->first) + ", " +
                           std::to_string(window->second) + "]");
    }
  }
  std::int64_t total = 0;
  for (const auto& [p, count] : census.branch) total += count.difference() * x.at(p);
  for (const auto& [q, count] : census.triple) total += count.difference() * (x.at(q) - x.at(q - 1));
  for (const auto& [r, count] : census.singular) total += count.difference() * 2 * x.at(r);
  return total;
}

std::map<int, StarBalance> star_balances(const Census& census) {
  std::map<int, StarBalance> out;
  for (int p : census_labels(census)) {
    StarBalance balance;
    balance.lhs = net_branch(census, p);
    balance.rhs = lookup(census.triple, p + 1).difference() - lookup(census.triple, p).difference();
    out.emplace(p, balance);
  }
  return out;
}

std::map<int, bool> check_star(const Census& census) {
  std::map<int, bool> out;
  for (const auto& [p, balance] : star_balances(census)) out.emplace(p, balance.ok());
  return out;
}

bool star_holds(const Census& census) {
  auto balances = star_balances(census);
  return std::all_of(balances.begin(), balances.end(), [](const auto& kv) { return kv.second.ok(); });
}

BranchSum corollary_branch_sum(const Census& census) {
  BranchSum result;
  for (const auto& [p, count] : census.branch) result.lhs += count.difference();
  for (const auto& [p, count] : census.singular) result.lhs += 2 * count.difference();
  result.ok = result.lhs == 0;
  return result;
}

std::map<int, PartialSum> corollary_partial_sums(const Census& census) {
  std::map<int, PartialSum> out;
  std::vector<int> labels = census_labels(census);
  if (labels.empty()) return out;
  int lo = labels.front();
  int hi = labels.back() + 1;
  std::int64_t total = 0;
  for (int i = lo; i <= hi; ++i) total += net_branch(census, i);
  std::int64_t prefix = 0;
  for (int p = lo; p <= hi; ++p) {
    PartialSum entry;
    entry.triple_difference = lookup(census.triple, p).difference();
    entry.prefix_sum = prefix;
    entry.negated_suffix_sum = -(total - prefix);
    entry.ok = entry.triple_difference == entry.prefix_sum && entry.prefix_sum == entry.negated_suffix_sum;
    out.emplace(p, entry);
    prefix += net_branch(census, p);
  }
  return out;
}

ImmersedResult corollary_immersed(const Census& census) {
  ImmersedResult result;
  bool singular_balanced = std::all_of(census.singular.begin(), census.singular.end(),
                                       [](const auto& kv) { return kv.second.difference() == 0; });
  if (has_support(census.branch) || !singular_balanced) return result;
  result.applicability = Applicability::applicable;
  result.holds = std::all_of(census.triple.begin(), census.triple.end(),
                             [](const auto& kv) { return kv.second.plus == kv.second.minus; });
  return result;
}

bool IdentityReport::ok() const {
  if (!edge_count_ok || !immersed.holds) return false;
  for (const auto& [p, balance] : star) {
    if (!balance.ok()) return false;
  }
  for (const auto& [name, total] : weighted_totals) {
    if (total != 0) return false;
  }
  return std::all_of(corollaries.begin(), corollaries.end(), [](const CorollaryResult& c) { return c.ok; });
}

IdentityReport verify_identities(const Census& census,
                                 std::span<const std::pair<std::string, WeightSequence>> weights) {
  IdentityReport report;
  report.edge_count_ok = check_edge_count(census);
  report.star = star_balances(census);
  for (const auto& [name, x] : weights) report.weighted_totals.emplace_back(name, weighted_sum(census, x));
  BranchSum branch = corollary_branch_sum(census);
  report.corollaries.push_back({"branch-sum", branch.lhs, 0, branch.ok});
  for (const auto& [p, entry] : corollary_partial_sums(census)) {
    report.corollaries.push_back(
        {"partial-sum@" + std::to_string(p), entry.triple_difference, entry.prefix_sum, entry.ok});
  }
  report.immersed = corollary_immersed(census);
  return report;
}

}  // namespace braidchart
