#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "braidchart/census.hpp"
#include "braidchart/error.hpp"
#include "braidchart/gadgets.hpp"
#include "braidchart/identities.hpp"
#include "braidchart/realizer.hpp"
#include "braidchart/validate.hpp"
#include "oracles.hpp"

using namespace braidchart;

namespace {

TargetCounts make(std::initializer_list<std::tuple<char, int, int, int>> entries) {
  TargetCounts t;
  for (auto [kind, index, plus, minus] : entries) {
    SignedTable& table = kind == 'B' ? t.branch : kind == 'T' ? t.triple : t.singular;
    table[index] = SignedCount{plus, minus};
  }
  return t;
}

void check_realization(const TargetCounts& t, const RealizeOptions& options = {}) {
  Realization r = realize(t, options);
  CHECK(verify_realization(t, r.chart, r.shift));
  CHECK(validate(r.chart).ok());
  CHECK(oracle::sphere_planar(r.chart));
  Census c = oracle::census(r.chart);
  CHECK(targets_of(c) == targets_of(t.as_census().shifted(r.shift)));
  CHECK(oracle::star_ok(c));
  CHECK(check_edge_count(census(r.chart)));
  for (const Vertex& v : r.chart.vertices()) {
    if (v.kind != VertexKind::crossing) continue;
    CHECK(std::abs(r.chart.label(v.rotation[0]) - r.chart.label(v.rotation[1])) >= 2);
  }
}

struct Slot {
  std::size_t vertex;
  std::size_t position;
  int label;
};

}  // namespace

TEST_CASE("plan_targets") {
  TargetCounts a = plan_targets(make({{'T', 2, 2, 0}}).triple);
  CHECK(a.normalized() == make({{'T', 2, 2, 0}, {'B', 1, 2, 0}, {'B', 2, 0, 2}}).normalized());
  CHECK(star_holds(a.as_census()));

  TargetCounts b = plan_targets(make({{'T', 2, 1, 1}}).triple);
  CHECK(b.normalized().branch.empty());

  TargetCounts c = plan_targets({}, make({{'D', 2, 1, 0}}).singular);
  CHECK(c.normalized() == make({{'D', 2, 1, 0}, {'B', 2, 0, 2}}).normalized());
  CHECK(star_holds(c.as_census()));
}

TEST_CASE("normalize_targets") {
  NormalizedTargets n = normalize_targets(make({{'B', -1, 1, 1}, {'B', 0, 1, 1}}));
  CHECK(n.shift == 2);
  CHECK(n.degree == 3);
  CHECK(n.targets.normalized() == make({{'B', 1, 1, 1}, {'B', 2, 1, 1}}).normalized());

  NormalizedTargets pos = normalize_targets(make({{'B', 1, 1, 1}}));
  CHECK(pos.shift == 0);
  CHECK(pos.degree == 2);

  NormalizedTargets empty = normalize_targets({});
  CHECK(empty.degree == 1);
  Realization r = realize({});
  CHECK(r.chart.vertex_count() == 0);
  CHECK(r.chart.degree() == 1);
}

TEST_CASE("realize a single edge") {
  TargetCounts t = make({{'B', 3, 1, 1}});
  Realization r = realize(t);
  CHECK(r.chart.vertex_count() == 2);
  CHECK(r.chart.edge_count() == 1);
  CHECK(census(r.chart) == census(gadgets::fe(3)).shifted(r.shift));
  check_realization(t);
}

TEST_CASE("white pair wirings by exhaustive search") {
  // Ends of a positive and a negative index-2 white vertex in template order.
  std::vector<Slot> outs, ins;
  std::size_t v = 0;
  for (Sign s : {Sign::plus, Sign::minus}) {
    auto tpl = white_template(2, s);
    for (std::size_t i = 0; i < 6; ++i) (tpl[i].incoming ? ins : outs).push_back({v, i, tpl[i].label});
    ++v;
  }
  std::vector<std::size_t> perm(ins.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t label_respecting = 0, planar = 0;
  std::vector<Chart> found;
  do {
    bool labels = true;
    for (std::size_t i = 0; i < outs.size(); ++i) labels = labels && outs[i].label == ins[perm[i]].label;
    if (!labels) continue;
    ++label_respecting;
    ChartBuilder b(3);
    b.add_vertex(VertexKind::white);
    b.add_vertex(VertexKind::white);
    std::vector<std::vector<EdgeEnd>> rot(2, std::vector<EdgeEnd>(6));
    for (std::size_t i = 0; i < outs.size(); ++i) {
      const Slot& o = outs[i];
      const Slot& in = ins[perm[i]];
      std::size_t e = b.add_edge(o.label, o.vertex, in.vertex);
      rot[o.vertex][o.position] = {e, EndSide::tail};
      rot[in.vertex][in.position] = {e, EndSide::head};
    }
    b.set_rotation(0, rot[0]);
    b.set_rotation(1, rot[1]);
    Chart c = b.build();
    if (oracle::sphere_planar(c)) {
      ++planar;
      found.push_back(c);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(label_respecting == 36);
  REQUIRE(planar >= 1);
  Chart wp = gadgets::wp(2);
  CHECK(oracle::face_count(wp) == 6);
  for (const Chart& c : found) {
    CHECK(validate(c).ok());
    CHECK(oracle::census(c) == oracle::census(wp));
  }

  TargetCounts t = make({{'T', 2, 1, 1}});
  Realization r = realize(t);
  CHECK(targets_of(census(r.chart)) == targets_of(census(wp)));
  check_realization(t);
}

TEST_CASE("realize planned targets") {
  check_realization(plan_targets(make({{'T', 2, 2, 0}}).triple));
  check_realization(plan_targets(make({{'T', 3, 1, 1}}).triple));
  check_realization(plan_targets(make({{'T', 2, 1, 0}, {'T', 4, 0, 2}}).triple, make({{'D', 1, 1, 0}}).singular));
  check_realization(make({{'D', 1, 1, 0}, {'T', 2, 2, 0}, {'D', 2, 0, 1}}));
  check_realization(make({{'B', 2, 2, 0}, {'D', 2, 0, 1}}));
}

TEST_CASE("verify_realization") {
  TargetCounts fe = make({{'B', 3, 1, 1}});
  CHECK(verify_realization(fe, gadgets::fe(3)));
  CHECK_FALSE(verify_realization(fe, gadgets::sw(2, Sign::plus)));
  CHECK_FALSE(verify_realization(fe, gadgets::xg(1, 2)));
  TargetCounts t = plan_targets(make({{'T', 3, 1, 1}}).triple);
  Realization r = realize(t);
  CHECK(verify_realization(t, r.chart, r.shift));
}

TEST_CASE("realize rejects unbalanced targets") {
  try {
    realize(make({{'B', 1, 1, 0}}));
    FAIL("accepted");
  } catch (const ChartError& e) {
    CHECK(e.kind() == ErrorKind::star_violation);
  }
}

TEST_CASE("a tiny budget fails cleanly") {
  TargetCounts t = plan_targets(make({{'T', 2, 2, 1}, {'T', 3, 0, 2}, {'T', 4, 2, 0}}).triple);
  RealizeOptions options;
  options.budget = 1;
  try {
    Realization r = realize(t, options);
    CHECK(verify_realization(t, r.chart, r.shift));
  } catch (const ChartError& e) {
    CHECK(e.kind() == ErrorKind::budget_exhausted);
    CHECK(std::string(e.what()).find("matched") != std::string::npos);
  }
}

TEST_CASE("ledger balance is the balance law") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 30; ++round) {
    SignedTable triple;
    for (int q = 2; q <= 5; ++q) triple[q] = SignedCount{static_cast<std::int64_t>(rng() % 3), static_cast<std::int64_t>(rng() % 3)};
    TargetCounts t = plan_targets(triple);
    CHECK(build_ledger(t).balanced());
    for (char kind : {'B', 'T', 'D'}) {
      TargetCounts bumped = t;
      SignedTable& table = kind == 'B' ? bumped.branch : kind == 'T' ? bumped.triple : bumped.singular;
      int index = 2 + static_cast<int>(rng() % 3);
      table[index][rng() % 2 ? Sign::plus : Sign::minus] += 1;
      CHECK_FALSE(build_ledger(bumped).balanced());
      CHECK_FALSE(star_holds(bumped.as_census()));
    }
  }
}

TEST_CASE("peeling conserves the targets") {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 40; ++round) {
    SignedTable triple, singular;
    for (int q = 2; q <= 4; ++q) triple[q] = SignedCount{static_cast<std::int64_t>(rng() % 3), static_cast<std::int64_t>(rng() % 3)};
    singular[static_cast<int>(1 + rng() % 4)] = SignedCount{static_cast<std::int64_t>(rng() % 2), static_cast<std::int64_t>(rng() % 2)};
    TargetCounts t = plan_targets(triple, singular);
    PeelPlan plan = peel_gadgets(t);
    Census sum = plan.residual.as_census();
    for (const PeeledGadget& g : plan.gadgets) sum += gadget_census(g);
    CHECK(targets_of(sum) == t.normalized());
    CHECK(star_holds(plan.residual.as_census()));
  }
}

TEST_CASE("crossing insertion") {
  // Routing before direct wiring makes the search place crossing vertices.
  RealizeOptions options;
  options.routes_first = true;
  options.crossings_from_start = true;
  TargetCounts t = make({{'B', 3, 0, 1}, {'B', 4, 0, 3}, {'B', 5, 2, 0}, {'T', 4, 1, 0}, {'T', 5, 0, 2}, {'D', 3, 1, 0}});
  REQUIRE(star_holds(t.as_census()));
  Realization r = realize(t, options);
  CHECK(verify_realization(t, r.chart, r.shift));
  CHECK(r.stats.crossings_inserted > 0);
  std::size_t crossings = 0;
  for (const Vertex& v : r.chart.vertices()) crossings += v.kind == VertexKind::crossing;
  CHECK(crossings == r.stats.crossings_inserted);
  check_realization(t, options);
}

TEST_CASE("random targets round-trip") {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 60; ++round) {
    SignedTable triple, singular;
    int whites = static_cast<int>(rng() % 7);
    for (int k = 0; k < whites; ++k) triple[static_cast<int>(2 + rng() % 4)][rng() % 2 ? Sign::plus : Sign::minus] += 1;
    if (round % 3 == 0) singular[static_cast<int>(1 + rng() % 5)][rng() % 2 ? Sign::plus : Sign::minus] += 1;
    check_realization(plan_targets(triple, singular));
  }
}

TEST_CASE("realized charts carry band coordinates") {
  Realization r = realize(plan_targets(make({{'T', 2, 2, 0}}).triple));
  CHECK(r.chart.coords().size() == r.chart.vertex_count());
  RealizeOptions bare;
  bare.emit_coords = false;
  CHECK_FALSE(realize(make({{'B', 1, 1, 1}}), bare).chart.has_coords());
}
