#include "braidchart/transforms.hpp"

#include "braidchart/error.hpp"

namespace braidchart {

Chart translate_labels(const Chart& chart, int shift, int new_degree) {
  ChartBuilder builder(new_degree);
  for (const Vertex& v : chart.vertices()) builder.add_vertex(v.kind, v.id);
  for (const Edge& e : chart.edges()) {
    int label = e.label + shift;
    if (label < 1 || label > new_degree - 1) {
      throw ChartError(ErrorKind::label_out_of_range, "edge '" + e.id + "' would get label " +
                                                          std::to_string(label) + " outside [1, " +
                                                          std::to_string(new_degree - 1) + "]");
    }
    builder.add_edge(label, e.tail, e.head, e.id);
  }
  for (std::size_t v = 0; v < chart.vertex_count(); ++v) builder.set_rotation(v, chart.vertex(v).rotation);
  for (const auto& [v, point] : chart.coords()) builder.set_coord(v, point);
  return builder.build();
}

Chart reverse_orientation(const Chart& chart) {
  ChartBuilder builder(chart.degree());
  for (const Vertex& v : chart.vertices()) builder.add_vertex(v.kind, v.id);
  for (const Edge& e : chart.edges()) builder.add_edge(e.label, e.head, e.tail, e.id);
  for (std::size_t v = 0; v < chart.vertex_count(); ++v) {
    std::vector<EdgeEnd> rotation = chart.vertex(v).rotation;
    for (EdgeEnd& end : rotation) end.side = opposite(end.side);
    builder.set_rotation(v, std::move(rotation));
  }
  for (const auto& [v, point] : chart.coords()) builder.set_coord(v, point);
  return builder.build();
}

}  // namespace braidchart
