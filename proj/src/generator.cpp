#include "braidchart/generator.hpp"

#include <functional>
#include <random>
#include <vector>

#include "braidchart/error.hpp"
#include "braidchart/faces.hpp"
#include "braidchart/gadgets.hpp"

namespace braidchart {
namespace {

struct GadgetChoice {
  std::size_t size;
  std::function<Chart(std::mt19937_64&)> make;
};

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Sign random_sign(std::mt19937_64& rng) { return uniform(rng, 0, 1) == 0 ? Sign::plus : Sign::minus; }

// Two labels in [1, n-1] at distance at least 2.
std::pair<int, int> distant_labels(std::mt19937_64& rng, int n) {
  int i = uniform(rng, 1, n - 3);
  int j = uniform(rng, i + 2, n - 1);
  return uniform(rng, 0, 1) == 0 ? std::pair{i, j} : std::pair{j, i};
}

std::vector<GadgetChoice> catalog(const GenConfig& config) {
  int n = config.degree;
  std::vector<GadgetChoice> out;
  if (!config.black_free) {
    out.push_back({2, [n](std::mt19937_64& rng) { return gadgets::fe(uniform(rng, 1, n - 1), n); }});
    if (n >= 3) {
      out.push_back({7, [n](std::mt19937_64& rng) {
                       int q = uniform(rng, 2, n - 1);
                       return gadgets::sw(q, random_sign(rng), n);
                     }});
    }
    if (n >= 4) {
      out.push_back({5, [n](std::mt19937_64& rng) {
                       auto [i, j] = distant_labels(rng, n);
                       return gadgets::xg(i, j, n);
                     }});
    }
    if (config.allow_singular) {
      out.push_back({3, [n](std::mt19937_64& rng) {
                       int p = uniform(rng, 1, n - 1);
                       return gadgets::sb(p, random_sign(rng), n);
                     }});
    }
  }
  if (n >= 3) out.push_back({2, [n](std::mt19937_64& rng) { return gadgets::wp(uniform(rng, 2, n - 1), n); }});
  if (n >= 4) {
    out.push_back({2, [n](std::mt19937_64& rng) {
                     auto [i, j] = distant_labels(rng, n);
                     return gadgets::xx(i, j, n);
                   }});
  }
  if (config.allow_singular) {
    out.push_back({2, [n](std::mt19937_64& rng) { return gadgets::sp(uniform(rng, 1, n - 1), n); }});
  }
  return out;
}

bool planar(const Chart& chart) { return euler_summary(chart).sphere_planar(); }

std::size_t pick(std::mt19937_64& rng, std::size_t count) {
  return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
}

}  // namespace

std::optional<Chart> splice(const Chart& chart, std::size_t e1, std::size_t e2) {
  if (e1 >= chart.edge_count() || e2 >= chart.edge_count() || e1 == e2) {
    throw ChartError(ErrorKind::precondition, "splice needs two distinct existing edges");
  }
  if (chart.edge(e1).label != chart.edge(e2).label) {
    throw ChartError(ErrorKind::precondition, "splice needs edges with equal labels");
  }
  ChartBuilder builder = to_builder(chart);
  std::size_t h1 = chart.edge(e1).head;
  std::size_t h2 = chart.edge(e2).head;
  builder.edge(e1).head = h2;
  builder.edge(e2).head = h1;
  for (std::size_t v : {h1, h2}) {
    std::vector<EdgeEnd> rotation = chart.vertex(v).rotation;
    for (EdgeEnd& end : rotation) {
      if (end.side != EndSide::head) continue;
      if (end.edge == e1) {
        end.edge = e2;
      } else if (end.edge == e2) {
        end.edge = e1;
      }
    }
    builder.set_rotation(v, std::move(rotation));
  }
  Chart result = builder.build();
  if (!planar(result)) return std::nullopt;
  return result;
}

std::optional<Chart> merge_blacks(const Chart& chart, std::size_t positive, std::size_t negative) {
  auto is_black = [&](std::size_t v) {
    return v < chart.vertex_count() && chart.vertex(v).kind == VertexKind::black;
  };
  if (!is_black(positive) || !is_black(negative)) {
    throw ChartError(ErrorKind::precondition, "merge_blacks needs two black vertices");
  }
  EdgeEnd out = chart.vertex(positive).rotation.front();
  EdgeEnd in = chart.vertex(negative).rotation.front();
  if (out.side != EndSide::tail || in.side != EndSide::head) {
    throw ChartError(ErrorKind::precondition, "merge_blacks needs a positive and a negative black");
  }
  if (chart.label(out) != chart.label(in)) {
    throw ChartError(ErrorKind::precondition, "label mismatch: " + std::to_string(chart.label(out)) + " vs " +
                                                  std::to_string(chart.label(in)));
  }
  if (out.edge == in.edge) return std::nullopt;

  // The positive black's edge survives and takes over the tail end of the
  // negative black's edge.
  std::size_t kept = out.edge;
  std::size_t dropped = in.edge;
  std::size_t new_tail = chart.edge(dropped).tail;

  std::vector<std::size_t> vertex_map(chart.vertex_count(), 0);
  std::vector<std::size_t> edge_map(chart.edge_count(), 0);
  ChartBuilder builder(chart.degree());
  for (std::size_t v = 0; v < chart.vertex_count(); ++v) {
    if (v == positive || v == negative) continue;
    vertex_map[v] = builder.add_vertex(chart.vertex(v).kind, chart.vertex(v).id);
  }
  for (std::size_t e = 0; e < chart.edge_count(); ++e) {
    if (e == dropped) continue;
    const Edge& edge = chart.edge(e);
    std::size_t tail = e == kept ? new_tail : edge.tail;
    edge_map[e] = builder.add_edge(edge.label, vertex_map[tail], vertex_map[edge.head], edge.id);
  }
  for (std::size_t v = 0; v < chart.vertex_count(); ++v) {
    if (v == positive || v == negative) continue;
    std::vector<EdgeEnd> rotation;
    for (EdgeEnd end : chart.vertex(v).rotation) {
      std::size_t e = end.edge == dropped ? kept : end.edge;
      rotation.push_back({edge_map[e], end.side});
    }
    builder.set_rotation(vertex_map[v], std::move(rotation));
  }
  for (const auto& [v, point] : chart.coords()) {
    if (v != positive && v != negative) builder.set_coord(vertex_map[v], point);
  }
  Chart result = builder.build();
  if (!planar(result)) return std::nullopt;
  return result;
}

Chart generate(const GenConfig& config) {
  if (config.target_vertices == 0) {
    ChartBuilder empty(std::max(config.degree, 1));
    return empty.build();
  }
  if (config.degree < 2) {
    throw ChartError(ErrorKind::infeasible_config, "charts with edges need degree at least 2");
  }
  std::vector<GadgetChoice> choices = catalog(config);
  std::mt19937_64 rng(config.seed);

  Chart chart = ChartBuilder(config.degree).build();
  while (true) {
    std::size_t room = config.target_vertices - chart.vertex_count();
    std::vector<const GadgetChoice*> fitting;
    for (const GadgetChoice& choice : choices) {
      if (choice.size <= room) fitting.push_back(&choice);
    }
    if (fitting.empty()) break;
    chart = disjoint_union(chart, fitting[pick(rng, fitting.size())]->make(rng));
  }
  if (chart.vertex_count() == 0) {
    throw ChartError(ErrorKind::infeasible_config,
                     "no gadget fits " + std::to_string(config.target_vertices) + " vertices at degree " +
                         std::to_string(config.degree) + (config.black_free ? " in black-free mode" : ""));
  }

  for (std::size_t attempt = 0; attempt < config.splice_attempts; ++attempt) {
    bool try_merge = !config.black_free && uniform(rng, 0, 2) == 0;
    if (try_merge) {
      std::vector<std::size_t> positives;
      std::vector<std::size_t> negatives;
      for (std::size_t v = 0; v < chart.vertex_count(); ++v) {
        const Vertex& vertex = chart.vertex(v);
        if (vertex.kind != VertexKind::black) continue;
        (vertex.rotation.front().side == EndSide::tail ? positives : negatives).push_back(v);
      }
      if (positives.empty()) continue;
      std::size_t plus = positives[pick(rng, positives.size())];
      int label = chart.label(chart.vertex(plus).rotation.front());
      std::vector<std::size_t> partners;
      for (std::size_t v : negatives) {
        if (chart.label(chart.vertex(v).rotation.front()) == label) partners.push_back(v);
      }
      if (partners.empty()) continue;
      if (auto merged = merge_blacks(chart, plus, partners[pick(rng, partners.size())])) chart = std::move(*merged);
    } else {
      if (chart.edge_count() < 2) continue;
      std::size_t e1 = pick(rng, chart.edge_count());
      std::vector<std::size_t> partners;
      for (std::size_t e = 0; e < chart.edge_count(); ++e) {
        if (e != e1 && chart.edge(e).label == chart.edge(e1).label) partners.push_back(e);
      }
      if (partners.empty()) continue;
      if (auto spliced = splice(chart, e1, partners[pick(rng, partners.size())])) chart = std::move(*spliced);
    }
  }
  return renumber_ids(chart);
}

}  // namespace braidchart
