#include "braidchart/faces.hpp"

#include <numeric>

namespace braidchart {

std::vector<Face> trace_faces(const Chart& chart) {
  std::vector<Face> faces;
  std::vector<std::array<bool, 2>> used(chart.edge_count(), {false, false});
  for (std::size_t e = 0; e < chart.edge_count(); ++e) {
    for (EndSide side : {EndSide::tail, EndSide::head}) {
      if (used[e][static_cast<std::size_t>(side)]) continue;
      Face face;
      EdgeEnd dart{e, side};
      while (!used[dart.edge][static_cast<std::size_t>(dart.side)]) {
        used[dart.edge][static_cast<std::size_t>(dart.side)] = true;
        face.push_back(dart);
        EdgeEnd arrival{dart.edge, opposite(dart.side)};
        const Vertex& at = chart.vertex(chart.attachment(arrival));
        dart = at.rotation[(chart.position(arrival) + 1) % at.rotation.size()];
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

std::vector<std::size_t> vertex_components(const Chart& chart, std::size_t* component_count) {
  std::vector<std::size_t> parent(chart.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : chart.edges()) parent[find(e.tail)] = find(e.head);
  std::vector<std::size_t> component(chart.vertex_count());
  std::vector<std::size_t> id_of_root(chart.vertex_count(), chart.vertex_count());
  std::size_t next = 0;
  for (std::size_t v = 0; v < chart.vertex_count(); ++v) {
    std::size_t root = find(v);
    if (id_of_root[root] == chart.vertex_count()) id_of_root[root] = next++;
    component[v] = id_of_root[root];
  }
  if (component_count != nullptr) *component_count = next;
  return component;
}

EulerSummary euler_summary(const Chart& chart) {
  EulerSummary summary;
  std::vector<std::size_t> component = vertex_components(chart, &summary.components);
  std::vector<long long> chi(summary.components, 0);
  for (std::size_t v = 0; v < chart.vertex_count(); ++v) ++chi[component[v]];
  for (const Edge& e : chart.edges()) --chi[component[e.tail]];
  std::vector<Face> faces = trace_faces(chart);
  for (const Face& face : faces) ++chi[component[chart.attachment(face.front())]];
  summary.vertices = chart.vertex_count();
  summary.edges = chart.edge_count();
  summary.faces = faces.size();
  for (std::size_t c = 0; c < chi.size(); ++c) {
    if (chi[c] != 2) summary.nonplanar_components.push_back(c);
  }
  return summary;
}

}  // namespace braidchart
