#pragma once

// Independent re-derivations used to check the library. Nothing here calls
// the census, face or identity code under test.

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "braidchart/census.hpp"
#include "braidchart/chart.hpp"

namespace oracle {

using namespace braidchart;

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

inline bool is_head(EdgeEnd end) { return end.side == EndSide::head; }

// Start of the three consecutive incoming ends of a 6-valent rotation, or -1.
inline int incoming_run(const Chart& chart, std::size_t v) {
  const auto& rot = chart.vertex(v).rotation;
  if (rot.size() != 6) return -1;
  int found = -1;
  for (int s = 0; s < 6; ++s) {
    bool run = true;
    for (int k = 0; k < 3; ++k) run = run && is_head(rot[(s + k) % 6]);
    for (int k = 3; k < 6; ++k) run = run && !is_head(rot[(s + k) % 6]);
    if (run) found = s;
  }
  return found;
}

inline bool white_template_ok(const Chart& chart, std::size_t v) {
  const auto& rot = chart.vertex(v).rotation;
  if (incoming_run(chart, v) < 0) return false;
  for (int i = 0; i < 6; ++i) {
    int a = chart.label(rot[i]);
    int b = chart.label(rot[(i + 1) % 6]);
    int c = chart.label(rot[(i + 2) % 6]);
    if (std::abs(a - b) != 1 || a != c) return false;
  }
  return true;
}

inline Census census(const Chart& chart) {
  Census out;
  for (std::size_t v = 0; v < chart.vertex_count(); ++v) {
    const auto& vx = chart.vertex(v);
    switch (vx.kind) {
      case VertexKind::black: {
        EdgeEnd end = vx.rotation[0];
        auto& slot = out.branch[chart.label(end)];
        (end.side == EndSide::tail ? slot.plus : slot.minus) += 1;
        break;
      }
      case VertexKind::white: {
        int s = incoming_run(chart, v);
        int middle = chart.label(vx.rotation[(s + 1) % 6]);
        int hi = 0;
        for (EdgeEnd e : vx.rotation) hi = std::max(hi, chart.label(e));
        auto& slot = out.triple[hi];
        (middle == hi ? slot.plus : slot.minus) += 1;
        break;
      }
      case VertexKind::singular: {
        auto& slot = out.singular[chart.label(vx.rotation[0])];
        (vx.rotation[0].side == EndSide::tail ? slot.plus : slot.minus) += 1;
        break;
      }
      case VertexKind::crossing:
        break;
    }
  }
  UnionFind uf(chart.edge_count());
  for (const auto& vx : chart.vertices()) {
    if (vx.kind != VertexKind::crossing) continue;
    uf.join(vx.rotation[0].edge, vx.rotation[2].edge);
    uf.join(vx.rotation[1].edge, vx.rotation[3].edge);
  }
  std::map<std::size_t, bool> has_endpoint;
  for (std::size_t e = 0; e < chart.edge_count(); ++e) {
    const Edge& edge = chart.edge(e);
    bool ends = chart.vertex(edge.tail).kind != VertexKind::crossing ||
                chart.vertex(edge.head).kind != VertexKind::crossing;
    has_endpoint[uf.find(e)] = has_endpoint[uf.find(e)] || ends;
  }
  for (const auto& [root, chain] : has_endpoint) {
    int label = chart.edge(root).label;
    (chain ? out.arcs[label] : out.loops[label]) += 1;
  }
  return out.normalized();
}

// Faces as cycles of the permutation dart -> next counterclockwise dart at
// the far end.
inline std::size_t face_count(const Chart& chart) {
  const std::size_t darts = 2 * chart.edge_count();
  auto dart = [](EdgeEnd e) { return 2 * e.edge + (e.side == EndSide::head ? 1 : 0); };
  std::vector<std::size_t> next_ccw(darts);
  for (const auto& vx : chart.vertices()) {
    for (std::size_t i = 0; i < vx.rotation.size(); ++i) {
      next_ccw[dart(vx.rotation[i])] = dart(vx.rotation[(i + 1) % vx.rotation.size()]);
    }
  }
  std::vector<bool> seen(darts, false);
  std::size_t faces = 0;
  for (std::size_t d0 = 0; d0 < darts; ++d0) {
    if (seen[d0]) continue;
    ++faces;
    for (std::size_t d = d0; !seen[d]; d = next_ccw[d ^ 1]) seen[d] = true;
  }
  return faces;
}

// Every connected component (as a vertex set) is a sphere map.
inline bool sphere_planar(const Chart& chart) {
  const std::size_t n = chart.vertex_count();
  UnionFind uf(n);
  for (const Edge& e : chart.edges()) uf.join(e.tail, e.head);
  std::map<std::size_t, long> chi;
  for (std::size_t v = 0; v < n; ++v) chi[uf.find(v)] += 1;
  for (const Edge& e : chart.edges()) chi[uf.find(e.tail)] -= 1;
  const std::size_t darts = 2 * chart.edge_count();
  auto dart = [](EdgeEnd e) { return 2 * e.edge + (e.side == EndSide::head ? 1 : 0); };
  std::vector<std::size_t> next_ccw(darts);
  for (const auto& vx : chart.vertices()) {
    for (std::size_t i = 0; i < vx.rotation.size(); ++i) {
      next_ccw[dart(vx.rotation[i])] = dart(vx.rotation[(i + 1) % vx.rotation.size()]);
    }
  }
  std::vector<bool> seen(darts, false);
  for (std::size_t d0 = 0; d0 < darts; ++d0) {
    if (seen[d0]) continue;
    const Edge& e = chart.edge(d0 / 2);
    chi[uf.find(d0 % 2 ? e.head : e.tail)] += 1;
    for (std::size_t d = d0; !seen[d]; d = next_ccw[d ^ 1]) seen[d] = true;
  }
  for (const auto& [root, value] : chi) {
    if (value != 2) return false;
  }
  return true;
}

inline std::int64_t weighted(const Census& c, const std::function<std::int64_t(int)>& x) {
  std::int64_t total = 0;
  for (const auto& [p, n] : c.branch) total += (n.plus - n.minus) * x(p);
  for (const auto& [q, n] : c.triple) total += (n.plus - n.minus) * (x(q) - x(q - 1));
  for (const auto& [r, n] : c.singular) total += (n.plus - n.minus) * 2 * x(r);
  return total;
}

inline bool star_ok(const Census& c) {
  std::vector<int> keys;
  for (const auto* t : {&c.branch, &c.triple, &c.singular}) {
    for (const auto& [p, n] : *t) {
      keys.push_back(p - 1);
      keys.push_back(p);
    }
  }
  auto diff = [](const SignedTable& t, int p) {
    auto it = t.find(p);
    return it == t.end() ? std::int64_t{0} : it->second.plus - it->second.minus;
  };
  for (int p : keys) {
    std::int64_t lhs = diff(c.branch, p) + 2 * diff(c.singular, p);
    std::int64_t rhs = diff(c.triple, p + 1) - diff(c.triple, p);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace oracle
