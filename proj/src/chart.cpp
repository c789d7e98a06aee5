#include "braidchart/chart.hpp"

#include <limits>
#include <unordered_set>
#include <utility>

#include "braidchart/error.hpp"

namespace braidchart {
namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

std::string end_name(const std::vector<Edge>& edges, EdgeEnd end) {
  return edges[end.edge].id + (end.side == EndSide::tail ? ":t" : ":h");
}

}  // namespace

std::string_view to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::black: return "black";
    case VertexKind::white: return "white";
    case VertexKind::crossing: return "crossing";
    case VertexKind::singular: return "singular";
  }
  return "?";
}

std::optional<VertexKind> parse_vertex_kind(std::string_view text) {
  if (text == "black") return VertexKind::black;
  if (text == "white") return VertexKind::white;
  if (text == "crossing") return VertexKind::crossing;
  if (text == "singular") return VertexKind::singular;
  return std::nullopt;
}

std::optional<std::size_t> Chart::find_vertex(std::string_view id) const {
  auto it = vertex_index_.find(std::string(id));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Chart::find_edge(std::string_view id) const {
  auto it = edge_index_.find(std::string(id));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ChartBuilder::add_vertex(VertexKind kind, std::string id) {
  if (id.empty()) id = "v" + std::to_string(vertices_.size() + 1);
  vertices_.push_back(Vertex{std::move(id), kind, {}});
  return vertices_.size() - 1;
}

std::size_t ChartBuilder::add_edge(int label, std::size_t tail, std::size_t head, std::string id) {
  if (id.empty()) id = "e" + std::to_string(edges_.size() + 1);
  edges_.push_back(Edge{std::move(id), label, tail, head});
  return edges_.size() - 1;
}

void ChartBuilder::set_rotation(std::size_t vertex, std::vector<EdgeEnd> rotation) {
  vertices_.at(vertex).rotation = std::move(rotation);
}

Chart ChartBuilder::build() const {
  if (degree_ < 1) {
    throw ChartError(ErrorKind::precondition, "degree must be at least 1, got " + std::to_string(degree_));
  }
  Chart chart;
  chart.degree_ = degree_;
  chart.vertices_ = vertices_;
  chart.edges_ = edges_;
  chart.coords_ = coords_;

  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (!chart.vertex_index_.emplace(vertices_[v].id, v).second) {
      throw ChartError(ErrorKind::duplicate_id, "duplicate vertex id '" + vertices_[v].id + "'");
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (!chart.edge_index_.emplace(edge.id, e).second) {
      throw ChartError(ErrorKind::duplicate_id, "duplicate edge id '" + edge.id + "'");
    }
    if (edge.tail >= vertices_.size() || edge.head >= vertices_.size()) {
      throw ChartError(ErrorKind::dangling_reference, "edge '" + edge.id + "' references a missing vertex");
    }
  }

  chart.end_position_.assign(edges_.size(), {kUnset, kUnset});
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const Vertex& vertex = vertices_[v];
    std::size_t required = valence(vertex.kind);
    if (vertex.rotation.size() != required) {
      throw ChartError(ErrorKind::arity_mismatch,
                       "vertex '" + vertex.id + "' (" + std::string(to_string(vertex.kind)) + ") has " +
                           std::to_string(vertex.rotation.size()) + " rotation ends, requires " +
                           std::to_string(required));
    }
    for (std::size_t i = 0; i < vertex.rotation.size(); ++i) {
      EdgeEnd end = vertex.rotation[i];
      if (end.edge >= edges_.size()) {
        throw ChartError(ErrorKind::dangling_reference,
                         "rotation of vertex '" + vertex.id + "' references a missing edge");
      }
      if (chart.attachment(end) != v) {
        throw ChartError(ErrorKind::dangling_reference,
                         "end " + end_name(edges_, end) + " listed at vertex '" + vertex.id +
                             "' but attached to '" + vertices_[chart.attachment(end)].id + "'");
      }
      std::size_t& slot = chart.end_position_[end.edge][static_cast<std::size_t>(end.side)];
      if (slot != kUnset) {
        throw ChartError(ErrorKind::duplicate_id, "end " + end_name(edges_, end) + " listed twice in rotation of '" +
                                                      vertex.id + "'");
      }
      slot = i;
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    for (EndSide side : {EndSide::tail, EndSide::head}) {
      if (chart.end_position_[e][static_cast<std::size_t>(side)] == kUnset) {
        EdgeEnd end{e, side};
        throw ChartError(ErrorKind::arity_mismatch, "end " + end_name(edges_, end) + " missing from rotation of '" +
                                                        vertices_[chart.attachment(end)].id + "'");
      }
    }
  }
  for (const auto& [v, point] : coords_) {
    if (v >= vertices_.size()) {
      throw ChartError(ErrorKind::dangling_reference, "coordinate for a missing vertex");
    }
  }
  return chart;
}

ChartBuilder to_builder(const Chart& chart) {
  ChartBuilder builder(chart.degree());
  for (const Vertex& v : chart.vertices()) builder.add_vertex(v.kind, v.id);
  for (const Edge& e : chart.edges()) builder.add_edge(e.label, e.tail, e.head, e.id);
  for (std::size_t v = 0; v < chart.vertex_count(); ++v) builder.set_rotation(v, chart.vertex(v).rotation);
  for (const auto& [v, point] : chart.coords()) builder.set_coord(v, point);
  return builder;
}

Chart build_chart(int degree, std::span<const VertexSpec> vertices, std::span<const EdgeSpec> edges,
                  std::span<const RotationSpec> rotations, std::span<const CoordSpec> coords) {
  ChartBuilder builder(degree);
  std::unordered_map<std::string, std::size_t> vertex_of;
  std::unordered_map<std::string, std::size_t> edge_of;
  for (const VertexSpec& spec : vertices) {
    if (!vertex_of.emplace(spec.id, builder.vertex_count()).second) {
      throw ChartError(ErrorKind::duplicate_id, "duplicate vertex id '" + spec.id + "'");
    }
    builder.add_vertex(spec.kind, spec.id);
  }
  auto resolve_vertex = [&](const std::string& id, const std::string& context) {
    auto it = vertex_of.find(id);
    if (it == vertex_of.end()) {
      throw ChartError(ErrorKind::dangling_reference, context + " references undeclared vertex '" + id + "'");
    }
    return it->second;
  };
  for (const EdgeSpec& spec : edges) {
    if (edge_of.count(spec.id) != 0) {
      throw ChartError(ErrorKind::duplicate_id, "duplicate edge id '" + spec.id + "'");
    }
    std::size_t tail = resolve_vertex(spec.tail, "edge '" + spec.id + "'");
    std::size_t head = resolve_vertex(spec.head, "edge '" + spec.id + "'");
    edge_of.emplace(spec.id, builder.add_edge(spec.label, tail, head, spec.id));
  }
  std::unordered_set<std::size_t> rotated;
  for (const RotationSpec& spec : rotations) {
    std::size_t v = resolve_vertex(spec.vertex, "rotation");
    if (!rotated.insert(v).second) {
      throw ChartError(ErrorKind::duplicate_id, "second rotation for vertex '" + spec.vertex + "'");
    }
    std::vector<EdgeEnd> ends;
    ends.reserve(spec.ends.size());
    for (const EndRef& ref : spec.ends) {
      auto it = edge_of.find(ref.edge);
      if (it == edge_of.end()) {
        throw ChartError(ErrorKind::dangling_reference,
                         "rotation of '" + spec.vertex + "' references undeclared edge '" + ref.edge + "'");
      }
      ends.push_back(EdgeEnd{it->second, ref.side});
    }
    builder.set_rotation(v, std::move(ends));
  }
  for (const CoordSpec& spec : coords) {
    builder.set_coord(resolve_vertex(spec.vertex, "coord"), spec.point);
  }
  return builder.build();
}

Chart disjoint_union(const Chart& a, const Chart& b) {
  ChartBuilder builder = to_builder(a);
  builder.set_degree(std::max(a.degree(), b.degree()));
  std::unordered_set<std::string> vertex_ids;
  std::unordered_set<std::string> edge_ids;
  for (const Vertex& v : a.vertices()) vertex_ids.insert(v.id);
  for (const Edge& e : a.edges()) edge_ids.insert(e.id);
  auto fresh = [](std::unordered_set<std::string>& used, const std::string& id) {
    std::string candidate = id;
    for (int k = 2; used.count(candidate) != 0; ++k) candidate = id + "_" + std::to_string(k);
    used.insert(candidate);
    return candidate;
  };
  std::size_t vertex_offset = a.vertex_count();
  std::size_t edge_offset = a.edge_count();
  for (const Vertex& v : b.vertices()) builder.add_vertex(v.kind, fresh(vertex_ids, v.id));
  for (const Edge& e : b.edges()) {
    builder.add_edge(e.label, e.tail + vertex_offset, e.head + vertex_offset, fresh(edge_ids, e.id));
  }
  for (std::size_t v = 0; v < b.vertex_count(); ++v) {
    std::vector<EdgeEnd> rotation = b.vertex(v).rotation;
    for (EdgeEnd& end : rotation) end.edge += edge_offset;
    builder.set_rotation(v + vertex_offset, std::move(rotation));
  }
  for (const auto& [v, point] : b.coords()) builder.set_coord(v + vertex_offset, point);
  return builder.build();
}

Chart renumber_ids(const Chart& chart) {
  ChartBuilder builder(chart.degree());
  for (const Vertex& v : chart.vertices()) builder.add_vertex(v.kind);
  for (const Edge& e : chart.edges()) builder.add_edge(e.label, e.tail, e.head);
  for (std::size_t v = 0; v < chart.vertex_count(); ++v) builder.set_rotation(v, chart.vertex(v).rotation);
  for (const auto& [v, point] : chart.coords()) builder.set_coord(v, point);
  return builder.build();
}

}  // namespace braidchart
