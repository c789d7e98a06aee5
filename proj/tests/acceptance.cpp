#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "braid_drawing.hpp"
#include "braidchart/census.hpp"
#include "braidchart/chart_io.hpp"
#include "braidchart/classical.hpp"
#include "braidchart/error.hpp"
#include "braidchart/cli.hpp"
#include "braidchart/gadgets.hpp"
#include "braidchart/generator.hpp"
#include "braidchart/identities.hpp"
#include "braidchart/realizer.hpp"
#include "braidchart/transforms.hpp"
#include "braidchart/validate.hpp"
#include "oracles.hpp"

using namespace braidchart;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void report(const char* name, double limit_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs > limit_s) o.fail("took " + std::to_string(secs) + " s");
  if (!o.ok) ++failures;
  std::printf("%s %s (%.2f s) %s\n", o.ok ? "PASS" : "FAIL", name, secs, o.detail.c_str());
}

std::vector<std::uint64_t> random_seeds(std::uint64_t base) {
  std::vector<std::uint64_t> s;
  for (std::uint64_t i = 0; i < 5; ++i) s.push_back(base * 7919 + i);
  return s;
}

// Identity checks shared by the fixture catalog and realized charts.
void identity_checks(const Chart& c, Outcome& o, const std::string& what, bool extra_weights) {
  if (!validate(c).ok()) return o.fail(what + ": invalid");
  Census cs = census(c);
  if (!(cs == oracle::census(c))) o.fail(what + ": census differs from oracle");
  if (!check_edge_count(cs)) o.fail(what + ": edge count");
  for (const auto& [p, ok] : check_star(cs)) {
    if (!ok) o.fail(what + ": balance at " + std::to_string(p));
  }
  if (!oracle::star_ok(cs)) o.fail(what + ": oracle balance");
  auto window = required_window(cs).value_or(std::pair{0, 1});
  std::vector<WeightSequence> weights;
  if (extra_weights) {
    weights.push_back(WeightSequence::constant(5, window.first, window.second));
    weights.push_back(WeightSequence::linear(window.first, window.second));
    weights.push_back(WeightSequence::triangular(window.first, window.second));
  }
  for (std::uint64_t s : random_seeds(c.vertex_count() + 1)) weights.push_back(WeightSequence::random(s, window.first, window.second));
  for (const WeightSequence& x : weights) {
    if (weighted_sum(cs, x) != 0) o.fail(what + ": weighted sum");
    if (oracle::weighted(cs, [&](int p) { return x.at(p); }) != 0) o.fail(what + ": oracle weighted sum");
  }
}

GenConfig config_for(std::uint64_t seed) {
  return {.seed = seed,
          .degree = 2 + static_cast<int>(seed % 7),
          .target_vertices = 10 + static_cast<std::size_t>(seed % 51),
          .allow_singular = true};
}

std::string data(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

}  // namespace

int main() {
  std::vector<Chart> generated;

  report("AC1 fixture identity suite", 1.0, [] {
    Outcome o;
    std::vector<std::pair<std::string, Chart>> fixtures{
        {"FE(1)", gadgets::fe(1)},           {"FE(3)", gadgets::fe(3)},
        {"SW(2,+)", gadgets::sw(2, Sign::plus)}, {"SW(2,-)", gadgets::sw(2, Sign::minus)},
        {"SW(3,+)", gadgets::sw(3, Sign::plus)}, {"SW(3,-)", gadgets::sw(3, Sign::minus)},
        {"WP(2)", gadgets::wp(2)},           {"SP(2)", gadgets::sp(2)},
        {"SB(2)", gadgets::sb(2)},           {"XG(1,3)", gadgets::xg(1, 3)}};
    for (const auto& [name, c] : fixtures) identity_checks(c, o, name, true);
    o.detail += std::to_string(fixtures.size()) + " fixtures";
    return o;
  });

  report("AC2 randomized identity verification", 30.0, [&] {
    Outcome o;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) generated.push_back(generate(config_for(seed)));
    for (std::size_t i = 0; i < generated.size(); ++i) {
      const Chart& c = generated[i];
      GenConfig cfg = config_for(i + 1);
      if (c.degree() > 8 || c.vertex_count() > 60 || cfg.degree > 8) o.fail("size bound");
      if (!oracle::sphere_planar(c)) o.fail("seed " + std::to_string(i + 1) + ": not planar");
      identity_checks(c, o, "seed " + std::to_string(i + 1), false);
    }
    o.detail += "1000 charts, 5 random weights each";
    return o;
  });

  report("AC3 corollary suite", 0, [&] {
    Outcome o;
    std::size_t plain = 0;
    for (std::size_t i = 0; i < generated.size(); ++i) {
      Census cs = census(generated[i]);
      if (!corollary_branch_sum(cs).ok) o.fail("branch sum, seed " + std::to_string(i + 1));
      std::int64_t branch = 0, singular = 0;
      for (const auto& [p, n] : cs.branch) branch += n.plus - n.minus;
      for (const auto& [p, n] : cs.singular) singular += n.plus - n.minus;
      if (branch + 2 * singular != 0) o.fail("signed branch count, seed " + std::to_string(i + 1));
      if (singular == 0 && cs.normalized().singular.empty()) {
        ++plain;
        if (branch != 0) o.fail("signed branch count without singular points");
      }
      for (const auto& [p, e] : corollary_partial_sums(cs)) {
        if (!e.ok) o.fail("partial sum at " + std::to_string(p) + ", seed " + std::to_string(i + 1));
      }
    }
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      Chart c = generate({.seed = seed, .degree = 3 + static_cast<int>(seed % 6), .target_vertices = 10 + seed % 40,
                          .black_free = true});
      Census cs = census(c);
      if (!cs.normalized().branch.empty()) o.fail("black-free chart has branch points");
      for (const auto& [p, t] : cs.triple) {
        if (t.plus != t.minus) o.fail("T(p,+) != T(p,-), black-free seed " + std::to_string(seed));
      }
      if (!corollary_immersed(cs).holds) o.fail("immersed corollary");
    }
    o.detail += "sum B + 2 sum D = 0 on 1000, sum B = 0 on " + std::to_string(plain) +
                " without singular points, 200 black-free";
    return o;
  });

  report("AC4 realization round trip", 120.0, [] {
    Outcome o;
    std::mt19937_64 rng(4);
    int done = 0;
    for (int round = 0; round < 250; ++round) {
      SignedTable triple, singular;
      int whites = static_cast<int>(rng() % 7);
      for (int k = 0; k < whites; ++k) triple[static_cast<int>(2 + rng() % 4)][rng() % 2 ? Sign::plus : Sign::minus] += 1;
      if (round >= 200) {
        int points = 1 + static_cast<int>(rng() % 2);
        for (int k = 0; k < points; ++k) singular[static_cast<int>(1 + rng() % 5)][rng() % 2 ? Sign::plus : Sign::minus] += 1;
      }
      TargetCounts t = plan_targets(triple, singular);
      Realization r = realize(t);
      if (!verify_realization(t, r.chart, r.shift)) o.fail("round " + std::to_string(round) + ": census mismatch");
      if (!oracle::sphere_planar(r.chart)) o.fail("round " + std::to_string(round) + ": not planar");
      identity_checks(r.chart, o, "round " + std::to_string(round), true);
      ++done;
    }
    o.detail += std::to_string(done) + " targets (50 with singular points)";
    return o;
  });

  report("AC5 star gadget spot checks", 0, [] {
    Outcome o;
    Census sw = census(gadgets::sw(2, Sign::plus));
    Census want;
    want.branch[1] = {2, 1};
    want.branch[2] = {1, 2};
    want.triple[2] = {1, 0};
    want.arcs[1] = 3;
    want.arcs[2] = 3;
    if (!(sw.normalized() == want.normalized())) o.fail("census");
    // B(1): 1*(2-1); B(2): 2*(1-2); T(2): (x_2 - x_1)*1.
    std::int64_t linear = 1 * (2 - 1) + 2 * (1 - 2) + (2 - 1) * 1;
    std::int64_t triangular = 1 * (2 - 1) + 3 * (1 - 2) + (3 - 1) * 1;
    if (linear != 0 || weighted_sum(sw, WeightSequence::linear(0, 2)) != linear) o.fail("linear");
    if (triangular != 0 || weighted_sum(sw, WeightSequence::triangular(0, 2)) != triangular) o.fail("triangular");
    o.detail += "1 - 2 + 1 = 0, 1 - 3 + 2 = 0";
    return o;
  });

  report("AC6 parser and serializer", 0, [&] {
    Outcome o;
    for (std::size_t i = 0; i < 500; ++i) {
      std::string text = serialize_chart(generated[i]);
      if (serialize_chart(parse_chart(text)) != text) o.fail("seed " + std::to_string(i + 1) + " does not round-trip");
    }
    std::istringstream expected(read_text_file(data("malformed/expected.tsv")));
    std::string file, kind;
    int line = 0, files = 0;
    while (expected >> file >> kind >> line) {
      ++files;
      try {
        parse_chart(read_text_file(data("malformed/" + file)));
        o.fail(file + " parsed");
      } catch (const ChartError& e) {
        if (to_string(e.kind()) != kind) o.fail(file + ": got " + std::string(to_string(e.kind())));
        if (std::string(e.what()).find("line " + std::to_string(line) + ":") == std::string::npos) o.fail(file + ": line");
      }
      std::ostringstream out, err;
      if (run_cli({"validate", data("malformed/" + file)}, out, err) != 2) o.fail(file + ": exit code");
    }
    if (files != 20) o.fail("expected 20 malformed files");
    o.detail += "500 round trips, " + std::to_string(files) + " malformed files";
    return o;
  });

  report("AC7 classical numbering", 0, [] {
    Outcome o;
    auto numbers = [](const PDDiagram& pd) {
      std::set<int> s;
      for (const Region& r : alexander_number(pd).regions) s.insert(r.number);
      return s;
    };
    if (numbers(parse_pd("A 1\n")) != std::set<int>{0, 1}) o.fail("unknot ccw");
    if (numbers(parse_pd("A 1 cw\n")) != std::set<int>{0, -1}) o.fail("unknot cw");
    if (numbers(reverse(parse_pd("A 1\n"))) != std::set<int>{0, -1}) o.fail("unknot reversed");

    oracle::Drawing d = oracle::closed_braid(2, {1, 1, 1});
    PDDiagram pd = parse_pd(d.pd);
    RegionNumbering n = alexander_number(pd);
    if (n.regions.size() != 5) o.fail("trefoil regions");
    std::set<std::size_t> seen;
    for (const auto& [arc, path] : d.arc_paths) {
      for (ArcSide side : {ArcSide::left, ArcSide::right}) {
        long w = std::lround(oracle::winding(d, oracle::beside(path, side)));
        if (n.number_of({arc, side}) != static_cast<int>(w)) o.fail("trefoil differs from winding numbers");
        seen.insert(*n.region_of({arc, side}));
      }
    }
    if (seen.size() != 5) o.fail("oracle reached " + std::to_string(seen.size()) + " regions");
    RegionNumbering r = alexander_number(reverse(pd));
    for (int arc : pd.arc_labels()) {
      if (r.number_of({arc, ArcSide::left}) != -*n.number_of({arc, ArcSide::right}) ||
          r.number_of({arc, ArcSide::right}) != -*n.number_of({arc, ArcSide::left})) {
        o.fail("reversal does not negate");
      }
    }
    if (!verify_numbering(pd, n) || !verify_numbering(reverse(pd), r)) o.fail("verify_numbering");
    o.detail += "trefoil regions {0,1,2} match winding numbers";
    return o;
  });

  report("AC8 symmetry properties", 0, [&] {
    Outcome o;
    std::mt19937_64 rng(8);
    for (std::size_t i = 0; i < 200; ++i) {
      const Chart& c = generated[i];
      Census cs = census(c);
      if (!(census(reverse_orientation(c)).normalized() == cs.sign_swapped().normalized())) o.fail("reverse, seed " + std::to_string(i + 1));
      int lo = c.degree(), hi = 0;
      for (const Edge& e : c.edges()) {
        lo = std::min(lo, e.label);
        hi = std::max(hi, e.label);
      }
      if (c.edge_count() == 0) lo = hi = 1;
      int k = static_cast<int>(rng() % 9) - 4;
      k = std::max(k, 1 - lo);
      int degree = std::max(c.degree(), hi + k + 1);
      Chart t = translate_labels(c, k, degree);
      if (!validate(t).ok()) o.fail("translated chart invalid");
      if (!(census(t).normalized() == cs.shifted(k).normalized())) o.fail("translate, seed " + std::to_string(i + 1));
    }
    o.detail += "200 charts";
    return o;
  });

  return failures == 0 ? 0 : 1;
}
