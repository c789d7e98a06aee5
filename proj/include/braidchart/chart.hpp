#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "braidchart/decimal.hpp"

namespace braidchart {

enum class Sign : int { plus = 1, minus = -1 };

constexpr int value(Sign s) { return static_cast<int>(s); }
constexpr Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr char symbol(Sign s) { return s == Sign::plus ? '+' : '-'; }

enum class VertexKind : std::uint8_t { black, white, crossing, singular };

// Number of edge ends a vertex of this kind carries.
constexpr std::size_t valence(VertexKind kind) {
  switch (kind) {
    case VertexKind::black: return 1;
    case VertexKind::white: return 6;
    case VertexKind::crossing: return 4;
    case VertexKind::singular: return 2;
  }
  return 0;
}

std::string_view to_string(VertexKind kind);
std::optional<VertexKind> parse_vertex_kind(std::string_view text);

enum class EndSide : std::uint8_t { tail, head };

constexpr EndSide opposite(EndSide s) { return s == EndSide::tail ? EndSide::head : EndSide::tail; }

struct EdgeEnd {
  std::size_t edge = 0;
  EndSide side = EndSide::tail;

  friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

struct Edge {
  std::string id;
  int label = 0;
  std::size_t tail = 0;
  std::size_t head = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Vertex {
  std::string id;
  VertexKind kind = VertexKind::black;
  std::vector<EdgeEnd> rotation;  // counterclockwise

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Point {
  Decimal x;
  Decimal y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Oriented, labeled planar map on the sphere. Immutable once built; every
/// edge end sits exactly once in the rotation of the vertex it attaches to.
/// Template and planarity rules are checked separately by `validate`.
class Chart {
 public:
  Chart() = default;

  int degree() const { return degree_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(std::size_t v) const { return vertices_[v]; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;

  std::size_t attachment(EdgeEnd end) const {
    const Edge& e = edges_[end.edge];
    return end.side == EndSide::tail ? e.tail : e.head;
  }
  std::size_t position(EdgeEnd end) const {
    return end_position_[end.edge][static_cast<std::size_t>(end.side)];
  }
  int label(EdgeEnd end) const { return edges_[end.edge].label; }
  static bool incoming(EdgeEnd end) { return end.side == EndSide::head; }

  const std::map<std::size_t, Point>& coords() const { return coords_; }
  bool has_coords() const { return !coords_.empty(); }

  friend bool operator==(const Chart& a, const Chart& b) {
    return a.degree_ == b.degree_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_ &&
           a.coords_ == b.coords_;
  }

 private:
  friend class ChartBuilder;

  int degree_ = 1;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<std::size_t, Point> coords_;
  std::vector<std::array<std::size_t, 2>> end_position_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
};

// Index-based assembly. Ids left empty are assigned as v<n> / e<n>.
class ChartBuilder {
 public:
  explicit ChartBuilder(int degree = 1) : degree_(degree) {}

  void set_degree(int degree) { degree_ = degree; }
  int degree() const { return degree_; }

  std::size_t add_vertex(VertexKind kind, std::string id = {});
  std::size_t add_edge(int label, std::size_t tail, std::size_t head, std::string id = {});
  void set_rotation(std::size_t vertex, std::vector<EdgeEnd> rotation);
  void set_coord(std::size_t vertex, Point point) { coords_[vertex] = point; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  Vertex& vertex(std::size_t v) { return vertices_.at(v); }
  Edge& edge(std::size_t e) { return edges_.at(e); }

  // Throws ChartError when a referential invariant fails.
  Chart build() const;

 private:
  int degree_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<std::size_t, Point> coords_;
};

// Rebuilds a builder holding a copy of `chart` (ids, rotations, coords).
ChartBuilder to_builder(const Chart& chart);

struct VertexSpec {
  std::string id;
  VertexKind kind = VertexKind::black;
};

struct EdgeSpec {
  std::string id;
  int label = 0;
  std::string tail;
  std::string head;
};

struct EndRef {
  std::string edge;
  EndSide side = EndSide::tail;
};

struct RotationSpec {
  std::string vertex;
  std::vector<EndRef> ends;
};

struct CoordSpec {
  std::string vertex;
  Point point;
};

// Resolves string ids. Errors: duplicate-id, dangling-reference,
// arity-mismatch, each naming the offending id.
Chart build_chart(int degree, std::span<const VertexSpec> vertices,
                  std::span<const EdgeSpec> edges, std::span<const RotationSpec> rotations,
                  std::span<const CoordSpec> coords = {});

// Disjoint union; ids of `b` are kept when they do not collide, otherwise
// renamed with a numeric suffix. Degree is the larger of the two.
Chart disjoint_union(const Chart& a, const Chart& b);

// Renames every vertex v<k> and edge e<k>, k = 1.. in storage order.
Chart renumber_ids(const Chart& chart);

}  // namespace braidchart
