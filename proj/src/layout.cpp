#include "braidchart/layout.hpp"

#include <algorithm>

#include "braidchart/census.hpp"

namespace braidchart {

std::map<std::size_t, Point> band_layout(const Chart& chart) {
  std::map<int, std::int64_t> next_row;
  std::map<std::size_t, Point> coords;
  for (std::size_t v = 0; v < chart.vertex_count(); ++v) {
    const Vertex& vertex = chart.vertex(v);
    int band = 0;
    if (vertex.kind == VertexKind::crossing) {
      for (EdgeEnd end : vertex.rotation) band = std::max(band, chart.label(end));
    } else {
      band = vertex_index(chart, v);
    }
    std::int64_t row = next_row[band]++;
    // x = band + 1/2; rows alternate a quarter step sideways to keep stacked
    // vertices apart.
    std::int64_t x_hundredths = static_cast<std::int64_t>(band) * 100 + (row % 2 == 0 ? 50 : 75);
    coords[v] = Point{Decimal(x_hundredths, 2), Decimal(-row)};
  }
  return coords;
}

Chart with_coords(const Chart& chart, const std::map<std::size_t, Point>& coords) {
  ChartBuilder builder = to_builder(chart);
  for (const auto& [v, point] : coords) builder.set_coord(v, point);
  return builder.build();
}

}  // namespace braidchart
