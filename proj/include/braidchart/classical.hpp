#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace braidchart {

struct PDCrossing {
  std::array<int, 4> arcs{};  // counterclockwise, starting at the incoming under-arc
  int over_in = 1;            // position (1 or 3) of the incoming over-arc
};

// Crossing-free closed component.
struct PDLoop {
  int arc = 0;
  bool ccw = true;
};

enum class ArcSide { left, right };

struct ArcSideRef {
  int arc = 0;
  ArcSide side = ArcSide::left;
  friend auto operator<=>(const ArcSideRef&, const ArcSideRef&) = default;
};

/// Oriented classical knot or link diagram in PD form.
///
/// Text format, one item per line, `#` comments:
///   X a b c d         crossing, arcs counterclockwise from the incoming under-arc
///   A k [ccw|cw]      closed component without crossings
///   U k left|right    the region on that side of arc k is unbounded
/// The over strand's direction follows from the under-arcs it meets; a
/// strand that is never under runs towards its next label (else b to d).
/// Without a `U` line a component's unbounded region is its face of least
/// winding potential (ties: longest boundary, then first traced).
struct PDDiagram {
  std::vector<PDCrossing> crossings;
  std::vector<PDLoop> loops;
  std::vector<ArcSideRef> outer;

  std::vector<int> arc_labels() const;
  std::size_t component_count() const;  // connected pieces of the diagram
};

// Errors: syntax for malformed lines, inconsistent-diagram when an arc is not
// used exactly twice, orientations clash, or the code is not planar.
PDDiagram parse_pd(std::string_view text);
std::string format_pd(const PDDiagram& pd);

struct Region {
  std::vector<ArcSideRef> boundary;
  int number = 0;
  bool unbounded = false;
};

/// Regions of the diagram's complement with their Alexander numbers. The
/// unbounded region is first; split components share it.
struct RegionNumbering {
  std::vector<Region> regions;

  std::optional<std::size_t> region_of(ArcSideRef side) const;
  std::optional<int> number_of(ArcSideRef side) const;
};

// The region to the left of travel is one larger than the region to the
// right, so numbers equal winding numbers.
RegionNumbering alexander_number(const PDDiagram& pd);

// Checks that the regions partition the arc sides of `pd`, the unbounded
// region is 0, and every arc has left = right + 1.
bool verify_numbering(const PDDiagram& pd, const RegionNumbering& numbering);

// Reverses every component, keeping the unbounded region in place.
PDDiagram reverse(const PDDiagram& pd);

}  // namespace braidchart
