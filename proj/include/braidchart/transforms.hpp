#pragma once

#include "braidchart/chart.hpp"

namespace braidchart {

// Adds `shift` to every label; throws label-out-of-range unless all shifted
// labels lie in [1, new_degree - 1].
Chart translate_labels(const Chart& chart, int shift, int new_degree);

// Swaps tail and head of every edge. Rotations keep their order.
Chart reverse_orientation(const Chart& chart);

}  // namespace braidchart
