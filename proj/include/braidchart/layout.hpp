#pragma once

#include <cstddef>
#include <map>

#include "braidchart/chart.hpp"

namespace braidchart {

// Places every vertex in the vertical band between x = p and x = p + 1,
// where p is its index (largest incident label for crossings), stacking the
// vertices of one band downward in storage order. For drawing only.
std::map<std::size_t, Point> band_layout(const Chart& chart);

Chart with_coords(const Chart& chart, const std::map<std::size_t, Point>& coords);

}  // namespace braidchart
