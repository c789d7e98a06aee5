#include <doctest.h>

#include "braidchart/census.hpp"
#include "braidchart/chart_io.hpp"
#include "braidchart/error.hpp"
#include "braidchart/gadgets.hpp"
#include "braidchart/generator.hpp"
#include "braidchart/identities.hpp"
#include "braidchart/validate.hpp"
#include "oracles.hpp"

using namespace braidchart;

namespace {

// Head swap done by hand for the splice oracle.
Chart swap_heads(const Chart& c, std::size_t e1, std::size_t e2) {
  ChartBuilder b = to_builder(c);
  std::size_t h1 = c.edge(e1).head, h2 = c.edge(e2).head;
  b.edge(e1).head = h2;
  b.edge(e2).head = h1;
  for (std::size_t v : {h1, h2}) {
    auto rot = c.vertex(v).rotation;
    for (EdgeEnd& end : rot) {
      if (end == EdgeEnd{e1, EndSide::head}) {
        end.edge = e2;
      } else if (end == EdgeEnd{e2, EndSide::head}) {
        end.edge = e1;
      }
    }
    b.set_rotation(v, rot);
  }
  return b.build();
}

std::size_t black_with(const Chart& c, EndSide side, int label, std::size_t skip = SIZE_MAX) {
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    if (v == skip || c.vertex(v).kind != VertexKind::black) continue;
    EdgeEnd e = c.vertex(v).rotation[0];
    if (e.side == side && c.label(e) == label) return v;
  }
  FAIL("no such black vertex");
  return 0;
}

}  // namespace

TEST_CASE("generate seed 1") {
  Chart c = generate({.seed = 1, .degree = 5, .target_vertices = 20});
  CHECK(validate(c).ok());
  CHECK(c.degree() == 5);
  CHECK(c.vertex_count() <= 20);
  Census cs = census(c);
  CHECK(cs == oracle::census(c));
  auto window = required_window(cs).value_or(std::pair{0, 1});
  for (std::uint64_t s = 1; s <= 5; ++s) {
    WeightSequence x = WeightSequence::random(s, window.first, window.second);
    CHECK(weighted_sum(cs, x) == 0);
    CHECK(oracle::weighted(cs, [&](int p) { return x.at(p); }) == 0);
  }
}

TEST_CASE("black-free generation") {
  Chart c = generate({.seed = 7, .degree = 6, .target_vertices = 20, .black_free = true});
  CHECK(validate(c).ok());
  Census cs = census(c);
  CHECK(cs.branch.empty());
  for (const auto& [p, t] : cs.triple) CHECK(t.plus == t.minus);
  ImmersedResult r = corollary_immersed(cs);
  CHECK(r.applicability == Applicability::applicable);
  CHECK(r.holds);
}

TEST_CASE("empty and infeasible configs") {
  Chart empty = generate({.seed = 3, .degree = 4, .target_vertices = 0});
  CHECK(empty.vertex_count() == 0);
  CHECK(validate(empty).ok());
  CHECK(weighted_sum(census(empty), WeightSequence::linear(0, 1)) == 0);
  CHECK(star_holds(census(empty)));

  auto kind_of = [](const GenConfig& cfg) {
    try {
      generate(cfg);
    } catch (const ChartError& e) {
      return e.kind();
    }
    return ErrorKind::usage;
  };
  CHECK(kind_of({.seed = 1, .degree = 2, .target_vertices = 1, .black_free = true}) == ErrorKind::infeasible_config);
  CHECK(kind_of({.seed = 1, .degree = 1, .target_vertices = 5}) == ErrorKind::infeasible_config);
}

TEST_CASE("generation is reproducible") {
  for (std::uint64_t seed : {1ULL, 99ULL, 12345ULL}) {
    GenConfig cfg{.seed = seed, .degree = 8, .target_vertices = 60, .allow_singular = true};
    CHECK(serialize_chart(generate(cfg)) == serialize_chart(generate(cfg)));
  }
  CHECK(serialize_chart(generate({.seed = 1})) != serialize_chart(generate({.seed = 2})));
}

TEST_CASE("generated charts satisfy every identity") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    GenConfig cfg{.seed = seed, .degree = 2 + static_cast<int>(seed % 7), .target_vertices = 10 + seed % 50,
                  .allow_singular = seed % 2 == 0};
    Chart c = generate(cfg);
    REQUIRE(validate(c).ok());
    CHECK(oracle::sphere_planar(c));
    Census cs = census(c);
    CHECK(check_edge_count(cs));
    CHECK(oracle::star_ok(cs));
    CHECK(corollary_branch_sum(cs).ok);
  }
}

TEST_CASE("splice") {
  SUBCASE("two edge charts") {
    Chart two = disjoint_union(gadgets::fe(1), gadgets::fe(1));
    auto spliced = splice(two, 0, 1);
    REQUIRE(spliced);
    CHECK(validate(*spliced).ok());
    CHECK(census(*spliced).branch == census(two).branch);
    CHECK(spliced->edge(0).head == two.edge(1).head);
    CHECK(spliced->edge(1).head == two.edge(0).head);
  }
  SUBCASE("matches the planarity oracle") {
    std::size_t rejected = 0, accepted = 0;
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      Chart c = generate({.seed = seed, .degree = 4, .target_vertices = 16, .allow_singular = true});
      for (std::size_t e1 = 0; e1 < c.edge_count(); ++e1) {
        for (std::size_t e2 = e1 + 1; e2 < c.edge_count(); ++e2) {
          if (c.edge(e1).label != c.edge(e2).label) continue;
          auto result = splice(c, e1, e2);
          Chart by_hand = swap_heads(c, e1, e2);
          bool planar = oracle::sphere_planar(by_hand);
          CHECK(result.has_value() == planar);
          if (result) {
            ++accepted;
            CHECK(*result == by_hand);
            CHECK(validate(*result).ok());
            CHECK(targets_of(census(*result)) == targets_of(census(c)));
          } else {
            ++rejected;
          }
        }
      }
    }
    CHECK(accepted > 0);
    CHECK(rejected > 0);
  }
  SUBCASE("preconditions") {
    Chart sw = gadgets::sw(2, Sign::plus);
    CHECK_THROWS_AS(splice(sw, 0, 0), ChartError);
    std::size_t e1 = 0, e2 = 0;
    for (std::size_t e = 0; e < sw.edge_count(); ++e) {
      if (sw.edge(e).label != sw.edge(0).label) e2 = e;
    }
    CHECK(e2 != e1);
    CHECK_THROWS_AS(splice(sw, e1, e2), ChartError);
  }
}

TEST_CASE("merge_blacks") {
  SUBCASE("both ends of one edge") {
    Chart fe = gadgets::fe(2);
    CHECK_FALSE(merge_blacks(fe, fe.edge(0).tail, fe.edge(0).head));
  }
  SUBCASE("across a disjoint union") {
    Chart u = disjoint_union(gadgets::sw(2, Sign::plus), gadgets::fe(1));
    std::size_t sw_vertices = gadgets::sw(2, Sign::plus).vertex_count();
    std::size_t minus = black_with(u, EndSide::head, 1);
    REQUIRE(minus < sw_vertices);
    std::size_t plus = SIZE_MAX;
    for (std::size_t v = sw_vertices; v < u.vertex_count(); ++v) {
      if (u.vertex(v).rotation[0].side == EndSide::tail) plus = v;
    }
    REQUIRE(plus != SIZE_MAX);
    auto merged = merge_blacks(u, plus, minus);
    REQUIRE(merged);
    CHECK(validate(*merged).ok());
    Census before = census(u), after = census(*merged);
    CHECK(lookup(after.branch, 1).plus == lookup(before.branch, 1).plus - 1);
    CHECK(lookup(after.branch, 1).minus == lookup(before.branch, 1).minus - 1);
    CHECK(star_holds(after));
    CHECK(merged->vertex_count() == u.vertex_count() - 2);
    CHECK(merged->edge_count() == u.edge_count() - 1);
  }
  SUBCASE("preconditions") {
    Chart u = disjoint_union(gadgets::fe(1), gadgets::fe(2));
    std::size_t plus1 = black_with(u, EndSide::tail, 1);
    std::size_t minus2 = black_with(u, EndSide::head, 2);
    CHECK_THROWS_AS(merge_blacks(u, plus1, minus2), ChartError);
    std::size_t minus1 = black_with(u, EndSide::head, 1);
    CHECK_THROWS_AS(merge_blacks(u, minus1, plus1), ChartError);
    Chart sw = gadgets::sw(2, Sign::plus);
    CHECK_THROWS_AS(merge_blacks(sw, 0, 1), ChartError);
  }
}
