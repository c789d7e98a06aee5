#pragma once

#include <string>

#include "braidchart/chart.hpp"

namespace braidchart {

struct SvgOptions {
  bool overlay = false;       // annotate black, white and singular vertices with "index,sign"
  bool allow_layout = true;   // fall back to the band layout when the chart has no coords
  double scale = 80.0;        // pixels per coordinate unit
};

// One arrowed <path> per edge with its label, a <circle> per black (filled)
// and white (open) vertex, a square mark per crossing and a diamond per
// singular vertex. Throws no-layout-available when coords are missing and
// layout is disabled.
std::string render_svg(const Chart& chart, const SvgOptions& options = {});

}  // namespace braidchart
