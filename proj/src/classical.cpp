#include "braidchart/classical.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "braidchart/error.hpp"

namespace braidchart {

namespace {

[[noreturn]] void bad(const std::string& message) { throw ChartError(ErrorKind::inconsistent_diagram, message); }

[[noreturn]] void syntax(std::size_t line, const std::string& message) {
  throw ChartError(ErrorKind::syntax, "line " + std::to_string(line) + ": syntax: " + message);
}

ArcSide flip(ArcSide s) { return s == ArcSide::left ? ArcSide::right : ArcSide::left; }

struct Occurrence {
  std::size_t crossing = 0;
  int pos = 0;
};

// Resolved geometry of a diagram: for every arc its tail and head
// occurrence, plus traced faces per component.
struct Structure {
  std::map<int, Occurrence> tail;
  std::map<int, Occurrence> head;
  std::vector<int> loop_arcs;
  std::map<int, std::size_t> component;  // arc -> component
  std::size_t components = 0;
  std::vector<std::vector<ArcSideRef>> faces;
  std::vector<std::size_t> face_component;
  std::map<ArcSideRef, std::size_t> face_of;
};

bool incoming(const PDCrossing& x, int pos) { return pos == 0 || pos == x.over_in; }

Structure analyze(const PDDiagram& pd) {
  Structure s;
  std::map<int, std::vector<Occurrence>> uses;
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    const auto& x = pd.crossings[i];
    if (x.over_in != 1 && x.over_in != 3) bad("crossing " + std::to_string(i + 1) + " has no over direction");
    for (int p = 0; p < 4; ++p) uses[x.arcs[p]].push_back({i, p});
  }
  std::set<int> loop_set;
  for (const auto& loop : pd.loops) {
    if (uses.count(loop.arc) || !loop_set.insert(loop.arc).second) {
      bad("arc " + std::to_string(loop.arc) + " is used more than once");
    }
    s.loop_arcs.push_back(loop.arc);
  }
  for (const auto& [arc, list] : uses) {
    if (list.size() != 2) {
      bad("arc " + std::to_string(arc) + " is used " + std::to_string(list.size()) + " times, expected 2");
    }
    bool in0 = incoming(pd.crossings[list[0].crossing], list[0].pos);
    bool in1 = incoming(pd.crossings[list[1].crossing], list[1].pos);
    if (in0 == in1) bad("arc " + std::to_string(arc) + " is " + (in0 ? "incoming" : "outgoing") + " at both ends");
    s.head[arc] = in0 ? list[0] : list[1];
    s.tail[arc] = in0 ? list[1] : list[0];
  }

  // Components: crossings joined by arcs; every loop is its own component.
  std::vector<std::size_t> parent(pd.crossings.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& [arc, t] : s.tail) parent[find(t.crossing)] = find(s.head[arc].crossing);
  std::map<std::size_t, std::size_t> root_id;
  std::vector<std::size_t> crossing_component(pd.crossings.size());
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    auto [it, inserted] = root_id.emplace(find(i), root_id.size());
    crossing_component[i] = it->second;
  }
  s.components = root_id.size();
  for (const auto& [arc, t] : s.tail) s.component[arc] = crossing_component[t.crossing];

  // Faces: walking a side with the face on the right, arriving at position j
  // continues along position j + 1 counterclockwise.
  std::set<ArcSideRef> used;
  auto trace = [&](ArcSideRef start, std::size_t comp) {
    std::vector<ArcSideRef> face;
    ArcSideRef cur = start;
    while (used.insert(cur).second) {
      face.push_back(cur);
      // Right side is walked forward (tail to head), left side backward.
      Occurrence at = cur.side == ArcSide::right ? s.head[cur.arc] : s.tail[cur.arc];
      const auto& x = pd.crossings[at.crossing];
      int next_pos = (at.pos + 1) % 4;
      int next_arc = x.arcs[static_cast<std::size_t>(next_pos)];
      const Occurrence& t = s.tail[next_arc];
      bool forward = t.crossing == at.crossing && t.pos == next_pos;
      cur = {next_arc, forward ? ArcSide::right : ArcSide::left};
    }
    if (cur != start) bad("face tracing did not close");
    s.face_component.push_back(comp);
    for (const auto& side : face) s.face_of[side] = s.faces.size();
    s.faces.push_back(std::move(face));
  };
  for (const auto& [arc, t] : s.tail) {
    for (ArcSide side : {ArcSide::left, ArcSide::right}) {
      if (!used.count({arc, side})) trace({arc, side}, s.component[arc]);
    }
  }
  for (int arc : s.loop_arcs) {
    std::size_t comp = s.components++;
    s.component[arc] = comp;
    for (ArcSide side : {ArcSide::left, ArcSide::right}) {
      s.face_component.push_back(comp);
      s.face_of[{arc, side}] = s.faces.size();
      s.faces.push_back({{arc, side}});
    }
  }

  // Sphere check per component with crossings.
  std::vector<long> euler(s.components, 0);
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) ++euler[crossing_component[i]];
  for (const auto& [arc, t] : s.tail) --euler[s.component[arc]];
  for (std::size_t f = 0; f < s.faces.size(); ++f) ++euler[s.face_component[f]];
  for (std::size_t c = 0; c < root_id.size(); ++c) {
    if (euler[c] != 2) bad("crossing code is not planar (V - E + F = " + std::to_string(euler[c]) + ")");
  }
  return s;
}

// Potentials with left = right + 1 across every arc, per component.
std::vector<long> potentials(const Structure& s) {
  std::vector<long> pot(s.faces.size(), 0);
  std::vector<bool> seen(s.faces.size(), false);
  std::map<std::size_t, std::vector<std::pair<std::size_t, long>>> adj;
  auto arcs_of = [&](auto&& fn) {
    for (const auto& [arc, t] : s.tail) fn(arc);
    for (int arc : s.loop_arcs) fn(arc);
  };
  arcs_of([&](int arc) {
    std::size_t l = s.face_of.at({arc, ArcSide::left});
    std::size_t r = s.face_of.at({arc, ArcSide::right});
    adj[r].push_back({l, 1});
    adj[l].push_back({r, -1});
  });
  for (std::size_t f0 = 0; f0 < s.faces.size(); ++f0) {
    if (seen[f0]) continue;
    seen[f0] = true;
    std::vector<std::size_t> stack{f0};
    while (!stack.empty()) {
      std::size_t f = stack.back();
      stack.pop_back();
      for (auto [g, d] : adj[f]) {
        if (!seen[g]) {
          seen[g] = true;
          pot[g] = pot[f] + d;
          stack.push_back(g);
        } else if (pot[g] != pot[f] + d) {
          bad("region numbers are inconsistent around a face");
        }
      }
    }
  }
  return pot;
}

std::vector<std::size_t> outer_faces(const PDDiagram& pd, const Structure& s, const std::vector<long>& pot) {
  std::vector<std::optional<std::size_t>> outer(s.components);
  for (const auto& loop : pd.loops) {
    outer[s.component.at(loop.arc)] = s.face_of.at({loop.arc, loop.ccw ? ArcSide::right : ArcSide::left});
  }
  for (const auto& o : pd.outer) {
    auto it = s.face_of.find(o);
    if (it == s.face_of.end()) bad("unbounded-region marker names unknown arc " + std::to_string(o.arc));
    outer[s.face_component[it->second]] = it->second;
  }
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    auto& best = outer[s.face_component[f]];
    if (!best) {
      best = f;
      continue;
    }
    bool explicit_choice = false;
    for (const auto& o : pd.outer) explicit_choice |= s.face_component[s.face_of.at(o)] == s.face_component[f];
    for (const auto& loop : pd.loops) explicit_choice |= s.component.at(loop.arc) == s.face_component[f];
    if (explicit_choice) continue;
    if (pot[f] < pot[*best] || (pot[f] == pot[*best] && s.faces[f].size() > s.faces[*best].size())) best = f;
  }
  std::vector<std::size_t> out;
  for (const auto& f : outer) out.push_back(*f);
  return out;
}

}  // namespace

std::vector<int> PDDiagram::arc_labels() const {
  std::set<int> labels;
  for (const auto& x : crossings) labels.insert(x.arcs.begin(), x.arcs.end());
  for (const auto& loop : loops) labels.insert(loop.arc);
  return {labels.begin(), labels.end()};
}

std::size_t PDDiagram::component_count() const { return analyze(*this).components; }

PDDiagram parse_pd(std::string_view text) {
  PDDiagram pd;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t ln = 0;
  std::vector<bool> over_known;
  auto number = [&](const std::string& tok) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) syntax(ln, "expected an integer, got '" + tok + "'");
    return v;
  };
  while (std::getline(in, raw)) {
    ++ln;
    std::istringstream line(raw);
    std::vector<std::string> t;
    for (std::string tok; line >> tok;) t.push_back(tok);
    if (t.empty() || t[0][0] == '#') continue;
    if (t[0] == "X") {
      if (t.size() != 5) syntax(ln, "expected 'X a b c d'");
      PDCrossing x;
      for (int i = 0; i < 4; ++i) x.arcs[static_cast<std::size_t>(i)] = number(t[static_cast<std::size_t>(i) + 1]);
      x.over_in = 0;
      pd.crossings.push_back(x);
    } else if (t[0] == "A") {
      if (t.size() != 2 && t.size() != 3) syntax(ln, "expected 'A k [ccw|cw]'");
      PDLoop loop{number(t[1]), true};
      if (t.size() == 3) {
        if (t[2] != "ccw" && t[2] != "cw") syntax(ln, "loop orientation must be ccw or cw");
        loop.ccw = t[2] == "ccw";
      }
      pd.loops.push_back(loop);
    } else if (t[0] == "U") {
      if (t.size() != 3 || (t[2] != "left" && t[2] != "right")) syntax(ln, "expected 'U k left|right'");
      pd.outer.push_back({number(t[1]), t[2] == "left" ? ArcSide::left : ArcSide::right});
    } else {
      syntax(ln, "unknown directive '" + t[0] + "'");
    }
  }

  // Over-arc directions follow from each arc entering one crossing and
  // leaving another; a strand that only ever passes over is read b -> d.
  std::map<int, std::vector<Occurrence>> uses;
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    for (int p = 0; p < 4; ++p) uses[pd.crossings[i].arcs[static_cast<std::size_t>(p)]].push_back({i, p});
  }
  for (const auto& [arc, list] : uses) {
    if (list.size() != 2) {
      bad("arc " + std::to_string(arc) + " is used " + std::to_string(list.size()) + " times, expected 2");
    }
  }
  auto direction = [&](Occurrence o) -> int {  // 1 incoming, -1 outgoing, 0 unknown
    const auto& x = pd.crossings[o.crossing];
    if (o.pos == 0) return 1;
    if (o.pos == 2) return -1;
    if (x.over_in == 0) return 0;
    return o.pos == x.over_in ? 1 : -1;
  };
  auto propagate = [&] {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [arc, list] : uses) {
        int d0 = direction(list[0]);
        int d1 = direction(list[1]);
        if (d0 != 0 && d1 != 0) {
          if (d0 == d1) bad("inconsistent orientation along arc " + std::to_string(arc));
          continue;
        }
        if (d0 == 0 && d1 == 0) continue;
        const Occurrence& unknown = d0 == 0 ? list[0] : list[1];
        int want = -(d0 == 0 ? d1 : d0);
        auto& x = pd.crossings[unknown.crossing];
        x.over_in = want == 1 ? unknown.pos : (unknown.pos + 2) % 4;
        changed = true;
      }
    }
  };
  propagate();
  // Components that are over everywhere: labels increase along the strand.
  for (auto& x : pd.crossings) {
    if (x.over_in != 0) continue;
    if (x.arcs[3] == x.arcs[1] + 1) {
      x.over_in = 1;
    } else if (x.arcs[1] == x.arcs[3] + 1) {
      x.over_in = 3;
    } else {
      continue;
    }
    propagate();
  }
  for (auto& x : pd.crossings) {
    if (x.over_in == 0) {
      x.over_in = 1;
      propagate();
    }
  }
  analyze(pd);
  return pd;
}

std::string format_pd(const PDDiagram& pd) {
  std::ostringstream out;
  for (const auto& x : pd.crossings) {
    out << "X " << x.arcs[0] << ' ' << x.arcs[1] << ' ' << x.arcs[2] << ' ' << x.arcs[3] << '\n';
  }
  for (const auto& loop : pd.loops) out << "A " << loop.arc << (loop.ccw ? " ccw" : " cw") << '\n';
  for (const auto& o : pd.outer) out << "U " << o.arc << (o.side == ArcSide::left ? " left" : " right") << '\n';
  return out.str();
}

std::optional<std::size_t> RegionNumbering::region_of(ArcSideRef side) const {
  for (std::size_t r = 0; r < regions.size(); ++r) {
    if (std::find(regions[r].boundary.begin(), regions[r].boundary.end(), side) != regions[r].boundary.end()) return r;
  }
  return std::nullopt;
}

std::optional<int> RegionNumbering::number_of(ArcSideRef side) const {
  auto r = region_of(side);
  if (!r) return std::nullopt;
  return regions[*r].number;
}

RegionNumbering alexander_number(const PDDiagram& pd) {
  Structure s = analyze(pd);
  std::vector<long> pot = potentials(s);
  std::vector<std::size_t> outer = outer_faces(pd, s, pot);

  RegionNumbering out;
  Region unbounded;
  unbounded.unbounded = true;
  for (std::size_t f : outer) {
    unbounded.boundary.insert(unbounded.boundary.end(), s.faces[f].begin(), s.faces[f].end());
  }
  out.regions.push_back(std::move(unbounded));
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    std::size_t comp = s.face_component[f];
    if (outer[comp] == f) continue;
    out.regions.push_back({s.faces[f], static_cast<int>(pot[f] - pot[outer[comp]]), false});
  }
  return out;
}

bool verify_numbering(const PDDiagram& pd, const RegionNumbering& numbering) {
  std::size_t unbounded = 0;
  std::map<ArcSideRef, int> number;
  for (const auto& region : numbering.regions) {
    if (region.unbounded) {
      ++unbounded;
      if (region.number != 0) return false;
    }
    for (const auto& side : region.boundary) {
      if (!number.emplace(side, region.number).second) return false;
    }
  }
  if (unbounded != 1) return false;
  const auto labels = pd.arc_labels();
  if (number.size() != 2 * labels.size()) return false;
  for (int arc : labels) {
    auto l = number.find({arc, ArcSide::left});
    auto r = number.find({arc, ArcSide::right});
    if (l == number.end() || r == number.end() || l->second != r->second + 1) return false;
  }
  return true;
}

PDDiagram reverse(const PDDiagram& pd) {
  Structure s = analyze(pd);
  std::vector<long> pot = potentials(s);
  std::vector<std::size_t> outer = outer_faces(pd, s, pot);

  PDDiagram out;
  for (const auto& x : pd.crossings) {
    out.crossings.push_back({{x.arcs[2], x.arcs[3], x.arcs[0], x.arcs[1]}, x.over_in});
  }
  for (const auto& loop : pd.loops) out.loops.push_back({loop.arc, !loop.ccw});
  for (std::size_t c = 0; c < outer.size(); ++c) {
    const ArcSideRef keep = s.faces[outer[c]].front();
    bool is_loop = std::find(s.loop_arcs.begin(), s.loop_arcs.end(), keep.arc) != s.loop_arcs.end();
    if (!is_loop) out.outer.push_back({keep.arc, flip(keep.side)});
  }
  return out;
}

}  // namespace braidchart
