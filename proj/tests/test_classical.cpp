#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "braidchart/classical.hpp"
#include "braidchart/error.hpp"
#include "braid_drawing.hpp"

using namespace braidchart;
using oracle::Drawing;
using oracle::Pt;
using oracle::beside;
using oracle::closed_braid;
using oracle::winding;

namespace {

void check_against_geometry(const Drawing& d, const PDDiagram& pd) {
  RegionNumbering n = alexander_number(pd);
  CHECK(verify_numbering(pd, n));
  for (const auto& [arc, path] : d.arc_paths) {
    for (ArcSide side : {ArcSide::left, ArcSide::right}) {
      auto got = n.number_of({arc, side});
      REQUIRE(got);
      CHECK(*got == static_cast<int>(std::lround(winding(d, beside(path, side)))));
    }
  }
}

int number_of(const RegionNumbering& n, int arc, ArcSide side) { return n.number_of({arc, side}).value(); }

std::vector<int> random_word(std::mt19937_64& rng, int m) {
  std::vector<int> word;
  for (int g = 1; g < m; ++g) word.push_back(rng() % 2 ? g : -g);
  int extra = static_cast<int>(rng() % 8);
  for (int k = 0; k < extra; ++k) {
    int g = 1 + static_cast<int>(rng() % (m - 1));
    word.push_back(rng() % 2 ? g : -g);
  }
  std::shuffle(word.begin(), word.end(), rng);
  return word;
}

}  // namespace

TEST_CASE("round unknot") {
  PDDiagram ccw = parse_pd("A 1\n");
  RegionNumbering n = alexander_number(ccw);
  REQUIRE(n.regions.size() == 2);
  CHECK(n.regions[0].unbounded);
  CHECK(n.regions[0].number == 0);
  CHECK(n.regions[1].number == 1);
  CHECK(verify_numbering(ccw, n));

  PDDiagram cw = parse_pd("A 1 cw\n");
  RegionNumbering m = alexander_number(cw);
  CHECK(m.regions[1].number == -1);
  CHECK(verify_numbering(cw, m));

  CHECK(alexander_number(reverse(ccw)).regions[1].number == -1);
}

TEST_CASE("trefoil PD") {
  const char* text = "# trefoil\nX 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2\n";
  PDDiagram pd = parse_pd(text);
  CHECK(pd.crossings.size() == 3);
  CHECK(pd.arc_labels().size() == 6);
  CHECK(pd.component_count() == 1);
  RegionNumbering n = alexander_number(pd);
  CHECK(n.regions.size() == 5);
  CHECK(verify_numbering(pd, n));
  for (const auto& r : n.regions) CHECK((r.number >= 0 && r.number <= 2));
  CHECK(parse_pd(format_pd(pd)).crossings.size() == 3);
}

TEST_CASE("trefoil as a closed 2-braid matches winding numbers") {
  Drawing d = closed_braid(2, {1, 1, 1});
  PDDiagram pd = parse_pd(d.pd);
  CHECK(pd.crossings.size() == 3);
  CHECK(pd.arc_labels().size() == 6);
  RegionNumbering n = alexander_number(pd);
  CHECK(n.regions.size() == 5);
  std::set<int> numbers;
  for (const auto& r : n.regions) numbers.insert(r.number);
  CHECK(numbers == std::set<int>{0, 1, 2});
  check_against_geometry(d, pd);
}

TEST_CASE("random closed braids match winding numbers") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int round = 0; round < 60; ++round) {
    int m = 2 + static_cast<int>(rng() % 4);
    Drawing d = closed_braid(m, random_word(rng, m));
    if (d.ambiguous) continue;
    ++checked;
    PDDiagram pd = parse_pd(d.pd);
    RegionNumbering n = alexander_number(pd);
    CHECK(n.regions.size() == pd.crossings.size() + 2);
    check_against_geometry(d, pd);
  }
  CHECK(checked >= 40);
}

TEST_CASE("reversal negates every region") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 40; ++round) {
    int m = 2 + static_cast<int>(rng() % 4);
    auto word = random_word(rng, m);
    Drawing d = closed_braid(m, word);
    PDDiagram pd = parse_pd(d.pd);
    RegionNumbering before = alexander_number(pd);
    RegionNumbering after = alexander_number(reverse(pd));
    CHECK(verify_numbering(reverse(pd), after));
    CHECK(after.regions.size() == before.regions.size());
    for (int arc : pd.arc_labels()) {
      CHECK(number_of(after, arc, ArcSide::left) == -number_of(before, arc, ArcSide::right));
      CHECK(number_of(after, arc, ArcSide::right) == -number_of(before, arc, ArcSide::left));
    }

    // The reversed drawing itself, with its unbounded region named.
    Drawing r = closed_braid(m, word, true);
    if (r.ambiguous) continue;
    std::string text = r.pd;
    // Windings are now non-positive, so only the outer region reads 0.
    for (const auto& [arc, path] : r.arc_paths) {
      Pt p = beside(path, ArcSide::left);
      if (std::lround(winding(r, p)) == 0) {
        text += "U " + std::to_string(arc) + " left\n";
        break;
      }
    }
    check_against_geometry(r, parse_pd(text));
  }
}

TEST_CASE("links and split diagrams") {
  Drawing hopf = closed_braid(2, {1, 1});
  PDDiagram pd = parse_pd(hopf.pd);
  CHECK(pd.component_count() == 1);
  CHECK(pd.arc_labels().size() == 4);
  check_against_geometry(hopf, pd);

  PDDiagram split = parse_pd("A 1\nA 2 cw\n");
  CHECK(split.component_count() == 2);
  RegionNumbering n = alexander_number(split);
  CHECK(n.regions.size() == 3);
  CHECK(verify_numbering(split, n));
  CHECK(number_of(n, 1, ArcSide::left) == 1);
  CHECK(number_of(n, 2, ArcSide::right) == -1);
  CHECK(number_of(n, 1, ArcSide::right) == 0);
  CHECK(number_of(n, 2, ArcSide::left) == 0);
}

TEST_CASE("verify_numbering rejects tampering") {
  PDDiagram pd = parse_pd("X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2\n");
  RegionNumbering n = alexander_number(pd);
  REQUIRE(verify_numbering(pd, n));
  RegionNumbering bumped = n;
  bumped.regions[2].number += 1;
  CHECK_FALSE(verify_numbering(pd, bumped));
  RegionNumbering shifted = n;
  for (auto& r : shifted.regions) r.number += 1;
  CHECK_FALSE(verify_numbering(pd, shifted));
  RegionNumbering missing = n;
  missing.regions.pop_back();
  CHECK_FALSE(verify_numbering(pd, missing));
}

TEST_CASE("PD errors") {
  auto kind_of = [](const char* text) {
    try {
      parse_pd(text);
    } catch (const ChartError& e) {
      return e.kind();
    }
    return ErrorKind::usage;
  };
  CHECK(kind_of("X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 1\n") == ErrorKind::inconsistent_diagram);
  CHECK(kind_of("X 1 2 3\n") == ErrorKind::syntax);
  CHECK(kind_of("Y 1 2 3 4\n") == ErrorKind::syntax);
  CHECK(kind_of("X 1 a 2 4\n") == ErrorKind::syntax);
  CHECK(kind_of("A 1 sideways\n") == ErrorKind::syntax);
  CHECK(kind_of("A 1\nA 1\n") == ErrorKind::inconsistent_diagram);
  CHECK(kind_of("X 1 2 1 2\n") == ErrorKind::inconsistent_diagram);
  CHECK(kind_of("X 1 4 2 3\nX 2 3 1 4\n") == ErrorKind::inconsistent_diagram);
}
