#include "braidchart/census.hpp"

#include <algorithm>
#include <set>

#include "braidchart/error.hpp"
#include "braidchart/validate.hpp"

namespace braidchart {

SignedCount lookup(const SignedTable& table, int index) {
  auto it = table.find(index);
  return it == table.end() ? SignedCount{} : it->second;
}

std::int64_t lookup(const CountTable& table, int index) {
  auto it = table.find(index);
  return it == table.end() ? 0 : it->second;
}

SignedTable normalized(const SignedTable& table) {
  SignedTable out;
  for (const auto& [p, count] : table) {
    if (!count.empty()) out.emplace(p, count);
  }
  return out;
}

CountTable normalized(const CountTable& table) {
  CountTable out;
  for (const auto& [p, count] : table) {
    if (count != 0) out.emplace(p, count);
  }
  return out;
}

Census Census::normalized() const {
  return Census{braidchart::normalized(branch), braidchart::normalized(triple),
                braidchart::normalized(singular), braidchart::normalized(arcs),
                braidchart::normalized(loops)};
}

Census Census::sign_swapped() const {
  auto swap = [](const SignedTable& table) {
    SignedTable out;
    for (const auto& [p, count] : table) out[p] = SignedCount{count.minus, count.plus};
    return out;
  };
  return Census{swap(branch), swap(triple), swap(singular), arcs, loops};
}

Census Census::shifted(int shift) const {
  auto move_signed = [shift](const SignedTable& table) {
    SignedTable out;
    for (const auto& [p, count] : table) out[p + shift] = count;
    return out;
  };
  auto move_plain = [shift](const CountTable& table) {
    CountTable out;
    for (const auto& [p, count] : table) out[p + shift] = count;
    return out;
  };
  return Census{move_signed(branch), move_signed(triple), move_signed(singular), move_plain(arcs),
                move_plain(loops)};
}

Census& Census::operator+=(const Census& other) {
  auto add_signed = [](SignedTable& into, const SignedTable& from) {
    for (const auto& [p, count] : from) {
      into[p].plus += count.plus;
      into[p].minus += count.minus;
    }
  };
  auto add_plain = [](CountTable& into, const CountTable& from) {
    for (const auto& [p, count] : from) into[p] += count;
  };
  add_signed(branch, other.branch);
  add_signed(triple, other.triple);
  add_signed(singular, other.singular);
  add_plain(arcs, other.arcs);
  add_plain(loops, other.loops);
  return *this;
}

bool operator==(const Census& a, const Census& b) {
  Census x = a.normalized();
  Census y = b.normalized();
  return x.branch == y.branch && x.triple == y.triple && x.singular == y.singular && x.arcs == y.arcs &&
         x.loops == y.loops;
}

int vertex_index(const Chart& chart, std::size_t v) {
  const Vertex& vertex = chart.vertex(v);
  switch (vertex.kind) {
    case VertexKind::black:
    case VertexKind::singular:
      return chart.label(vertex.rotation.front());
    case VertexKind::white: {
      int top = 0;
      for (EdgeEnd end : vertex.rotation) top = std::max(top, chart.label(end));
      return top;
    }
    case VertexKind::crossing:
      break;
  }
  throw ChartError(ErrorKind::no_index, "no index for crossing vertex '" + vertex.id + "'");
}

Sign vertex_sign(const Chart& chart, std::size_t v) {
  const Vertex& vertex = chart.vertex(v);
  switch (vertex.kind) {
    case VertexKind::black:
      return Chart::incoming(vertex.rotation.front()) ? Sign::minus : Sign::plus;
    case VertexKind::singular:
      return Chart::incoming(vertex.rotation.front()) ? Sign::minus : Sign::plus;
    case VertexKind::white: {
      std::optional<std::size_t> start = incoming_block_start(chart, v);
      if (!start) {
        throw ChartError(ErrorKind::precondition, "white vertex '" + vertex.id + "' breaks the white template");
      }
      EdgeEnd middle = vertex.rotation[(*start + 1) % vertex.rotation.size()];
      return chart.label(middle) == vertex_index(chart, v) ? Sign::plus : Sign::minus;
    }
    case VertexKind::crossing:
      break;
  }
  throw ChartError(ErrorKind::no_sign, "no sign for crossing vertex '" + vertex.id + "'");
}

std::vector<Arc> trace_arcs(const Chart& chart) {
  std::vector<Arc> arcs;
  std::vector<bool> used(chart.edge_count(), false);

  // Edge leaving a crossing opposite to the end where `e` arrives.
  auto continue_through = [&](std::size_t e) -> std::size_t {
    EdgeEnd arrival{e, EndSide::head};
    const Vertex& crossing = chart.vertex(chart.attachment(arrival));
    EdgeEnd exit = crossing.rotation[(chart.position(arrival) + 2) % 4];
    if (exit.side != EndSide::tail || chart.label(exit) != chart.label(arrival)) {
      throw ChartError(ErrorKind::precondition, "malformed crossing '" + crossing.id + "'");
    }
    return exit.edge;
  };
  auto claim = [&](std::size_t e) {
    if (used[e]) throw ChartError(ErrorKind::precondition, "edge '" + chart.edge(e).id + "' reached twice");
    used[e] = true;
  };

  for (std::size_t v = 0; v < chart.vertex_count(); ++v) {
    const Vertex& vertex = chart.vertex(v);
    if (vertex.kind == VertexKind::crossing) continue;
    for (EdgeEnd end : vertex.rotation) {
      if (end.side != EndSide::tail) continue;
      Arc arc;
      arc.label = chart.label(end);
      arc.kind = ArcKind::chain;
      arc.start = ArcEndpoint{v, end};
      std::size_t e = end.edge;
      while (true) {
        claim(e);
        arc.edges.push_back(e);
        std::size_t head = chart.edge(e).head;
        if (chart.vertex(head).kind != VertexKind::crossing) {
          arc.finish = ArcEndpoint{head, EdgeEnd{e, EndSide::head}};
          break;
        }
        e = continue_through(e);
      }
      arcs.push_back(std::move(arc));
    }
  }
  for (std::size_t first = 0; first < chart.edge_count(); ++first) {
    if (used[first]) continue;
    Arc arc;
    arc.label = chart.edge(first).label;
    arc.kind = ArcKind::loop;
    std::size_t e = first;
    do {
      claim(e);
      arc.edges.push_back(e);
      e = continue_through(e);
    } while (e != first);
    arcs.push_back(std::move(arc));
  }
  return arcs;
}

Census census(const Chart& chart) {
  Census result;
  for (std::size_t v = 0; v < chart.vertex_count(); ++v) {
    VertexKind kind = chart.vertex(v).kind;
    if (kind == VertexKind::crossing) continue;
    SignedTable& table = kind == VertexKind::black   ? result.branch
                         : kind == VertexKind::white ? result.triple
                                                     : result.singular;
    table[vertex_index(chart, v)][vertex_sign(chart, v)] += 1;
  }
  for (const Arc& arc : trace_arcs(chart)) {
    (arc.kind == ArcKind::chain ? result.arcs : result.loops)[arc.label] += 1;
  }
  return result;
}

std::int64_t predicted_arc_starts(const Census& c, int p) {
  SignedCount b = lookup(c.branch, p);
  SignedCount t = lookup(c.triple, p);
  SignedCount t_up = lookup(c.triple, p + 1);
  SignedCount d = lookup(c.singular, p);
  return b.plus + 2 * t.plus + t.minus + t_up.plus + 2 * t_up.minus + 2 * d.plus;
}

std::int64_t predicted_arc_ends(const Census& c, int p) {
  SignedCount b = lookup(c.branch, p);
  SignedCount t = lookup(c.triple, p);
  SignedCount t_up = lookup(c.triple, p + 1);
  SignedCount d = lookup(c.singular, p);
  return b.minus + 2 * t.minus + t.plus + t_up.minus + 2 * t_up.plus + 2 * d.minus;
}

std::vector<int> census_labels(const Census& c) {
  std::set<int> labels;
  for (const auto& [p, count] : c.branch) labels.insert(p);
  for (const auto& [p, count] : c.singular) labels.insert(p);
  for (const auto& [p, count] : c.arcs) labels.insert(p);
  for (const auto& [p, count] : c.loops) labels.insert(p);
  for (const auto& [q, count] : c.triple) {
    labels.insert(q);
    labels.insert(q - 1);
  }
  return {labels.begin(), labels.end()};
}

bool check_edge_count(const Census& c) {
  for (int p : census_labels(c)) {
    std::int64_t arcs = lookup(c.arcs, p);
    if (predicted_arc_starts(c, p) != arcs || predicted_arc_ends(c, p) != arcs) return false;
  }
  return true;
}

}  // namespace braidchart
