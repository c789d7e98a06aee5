#include "braidchart/realizer.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <set>

#include "braidchart/error.hpp"
#include "braidchart/gadgets.hpp"
#include "braidchart/identities.hpp"
#include "braidchart/layout.hpp"
#include "braidchart/validate.hpp"

namespace braidchart {

TargetCounts TargetCounts::normalized() const {
  return TargetCounts{braidchart::normalized(branch), braidchart::normalized(triple),
                      braidchart::normalized(singular)};
}

Census TargetCounts::as_census() const {
  Census c;
  c.branch = branch;
  c.triple = triple;
  c.singular = singular;
  return c;
}

bool operator==(const TargetCounts& a, const TargetCounts& b) {
  TargetCounts x = a.normalized();
  TargetCounts y = b.normalized();
  return x.branch == y.branch && x.triple == y.triple && x.singular == y.singular;
}

TargetCounts targets_of(const Census& census) {
  return TargetCounts{census.branch, census.triple, census.singular}.normalized();
}

std::vector<int> EndLedger::imbalanced_labels() const {
  std::set<int> labels;
  for (const auto& [p, ends] : outgoing) labels.insert(p);
  for (const auto& [p, ends] : incoming) labels.insert(p);
  std::vector<int> out;
  for (int p : labels) {
    auto o = outgoing.find(p);
    auto i = incoming.find(p);
    std::size_t n_out = o == outgoing.end() ? 0 : o->second.size();
    std::size_t n_in = i == incoming.end() ? 0 : i->second.size();
    if (n_out != n_in) out.push_back(p);
  }
  return out;
}

EndLedger build_ledger(const TargetCounts& targets) {
  EndLedger ledger;
  auto record = [&](VertexKind kind, int index, Sign sign, std::size_t ordinal, std::size_t slot, int label,
                    bool incoming) {
    LedgerEnd end{kind, index, sign, ordinal, slot};
    (incoming ? ledger.incoming : ledger.outgoing)[label].push_back(end);
  };
  for (const auto& [p, count] : targets.branch) {
    for (Sign sign : {Sign::plus, Sign::minus}) {
      for (std::int64_t k = 0; k < count[sign]; ++k) {
        record(VertexKind::black, p, sign, static_cast<std::size_t>(k), 0, p, sign == Sign::minus);
      }
    }
  }
  for (const auto& [q, count] : targets.triple) {
    for (Sign sign : {Sign::plus, Sign::minus}) {
      auto pattern = white_template(q, sign);
      for (std::int64_t k = 0; k < count[sign]; ++k) {
        for (std::size_t s = 0; s < pattern.size(); ++s) {
          record(VertexKind::white, q, sign, static_cast<std::size_t>(k), s, pattern[s].label, pattern[s].incoming);
        }
      }
    }
  }
  for (const auto& [r, count] : targets.singular) {
    for (Sign sign : {Sign::plus, Sign::minus}) {
      for (std::int64_t k = 0; k < count[sign]; ++k) {
        for (std::size_t s = 0; s < 2; ++s) {
          record(VertexKind::singular, r, sign, static_cast<std::size_t>(k), s, r, sign == Sign::minus);
        }
      }
    }
  }
  return ledger;
}

TargetCounts plan_targets(const SignedTable& triple, const SignedTable& singular) {
  TargetCounts t;
  t.triple = normalized(triple);
  t.singular = normalized(singular);
  std::set<int> labels;
  for (const auto& [q, count] : t.triple) {
    labels.insert(q);
    labels.insert(q - 1);
  }
  for (const auto& [r, count] : t.singular) labels.insert(r);
  for (int p : labels) {
    std::int64_t need = lookup(t.triple, p + 1).difference() - lookup(t.triple, p).difference() -
                        2 * lookup(t.singular, p).difference();
    if (need > 0) t.branch[p].plus = need;
    if (need < 0) t.branch[p].minus = -need;
  }
  return t;
}

NormalizedTargets normalize_targets(const TargetCounts& targets) {
  NormalizedTargets out;
  TargetCounts t = targets.normalized();
  std::optional<int> lo;
  std::optional<int> hi;
  auto see = [&](int low, int high) {
    lo = lo ? std::min(*lo, low) : low;
    hi = hi ? std::max(*hi, high) : high;
  };
  for (const auto& [p, c] : t.branch) see(p, p);
  for (const auto& [r, c] : t.singular) see(r, r);
  for (const auto& [q, c] : t.triple) see(q - 1, q);
  if (!lo) {
    out.targets = t;
    return out;
  }
  out.shift = 1 - *lo;
  Census shifted = t.as_census().shifted(out.shift);
  out.targets = TargetCounts{shifted.branch, shifted.triple, shifted.singular};
  out.degree = *hi + out.shift + 1;
  return out;
}

PeelPlan peel_gadgets(const TargetCounts& targets) {
  PeelPlan plan;
  plan.residual = targets.normalized();
  for (auto& [q, count] : plan.residual.triple) {
    std::int64_t pairs = std::min(count.plus, count.minus);
    for (std::int64_t k = 0; k < pairs; ++k) plan.gadgets.push_back({GadgetKind::wp, q});
    count.plus -= pairs;
    count.minus -= pairs;
  }
  for (auto& [r, count] : plan.residual.singular) {
    std::int64_t pairs = std::min(count.plus, count.minus);
    for (std::int64_t k = 0; k < pairs; ++k) plan.gadgets.push_back({GadgetKind::sp, r});
    count.plus -= pairs;
    count.minus -= pairs;
  }
  // Branch pairs beyond what the remaining white/singular ends can absorb.
  TargetCounts non_black = plan.residual;
  non_black.branch.clear();
  EndLedger ledger = build_ledger(non_black);
  for (auto& [p, count] : plan.residual.branch) {
    auto in_it = ledger.incoming.find(p);
    auto out_it = ledger.outgoing.find(p);
    std::int64_t absorbs_plus = in_it == ledger.incoming.end() ? 0 : static_cast<std::int64_t>(in_it->second.size());
    std::int64_t absorbs_minus = out_it == ledger.outgoing.end() ? 0 : static_cast<std::int64_t>(out_it->second.size());
    std::int64_t pairs = std::min(count.plus - absorbs_plus, count.minus - absorbs_minus);
    for (std::int64_t k = 0; k < pairs; ++k) plan.gadgets.push_back({GadgetKind::fe, p});
    if (pairs > 0) {
      count.plus -= pairs;
      count.minus -= pairs;
    }
  }
  plan.residual = plan.residual.normalized();
  return plan;
}

Census gadget_census(const PeeledGadget& gadget) {
  Census c;
  switch (gadget.kind) {
    case GadgetKind::wp:
      c.triple[gadget.index] = {1, 1};
      break;
    case GadgetKind::sp:
      c.singular[gadget.index] = {1, 1};
      break;
    case GadgetKind::fe:
      c.branch[gadget.index] = {1, 1};
      break;
  }
  return c;
}

namespace {

constexpr int kUnmatched = -1;

struct Slot {
  int vertex = 0;
  int label = 0;
  bool incoming = false;
};

struct SearchVertex {
  VertexKind kind = VertexKind::black;
  std::vector<int> slots;  // counterclockwise
  int order = 0;
};

// Partial wiring of a fixed vertex multiset. An edge is a matched pair of an
// outgoing slot and an incoming slot with equal labels.
struct Wiring {
  std::vector<SearchVertex> vertices;
  std::vector<Slot> slots;
  std::vector<int> partner;
  std::vector<int> position;
  std::size_t crossings = 0;

  int add_vertex(VertexKind kind, int order) {
    vertices.push_back(SearchVertex{kind, {}, order});
    return static_cast<int>(vertices.size()) - 1;
  }
  int add_slot(int v, int label, bool incoming) {
    int s = static_cast<int>(slots.size());
    slots.push_back(Slot{v, label, incoming});
    partner.push_back(kUnmatched);
    position.push_back(static_cast<int>(vertices[static_cast<std::size_t>(v)].slots.size()));
    vertices[static_cast<std::size_t>(v)].slots.push_back(s);
    return s;
  }
  bool matched(int s) const { return partner[static_cast<std::size_t>(s)] != kUnmatched; }
  bool black(int s) const {
    return vertices[static_cast<std::size_t>(slots[static_cast<std::size_t>(s)].vertex)].kind == VertexKind::black;
  }
  void connect(int a, int b) {
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
  }
  void disconnect(int a, int b) {
    partner[static_cast<std::size_t>(a)] = kUnmatched;
    partner[static_cast<std::size_t>(b)] = kUnmatched;
  }
};

// Faces and components of the matched part of a wiring.
struct Analysis {
  std::vector<int> dart_face;    // face to the right of the dart leaving each matched slot
  std::vector<int> corner_face;  // face holding each unmatched slot
  std::vector<int> component;    // per vertex
  int faces = 0;
};

int next_matched(const Wiring& w, int s, int step) {
  const auto& ring = w.vertices[static_cast<std::size_t>(w.slots[static_cast<std::size_t>(s)].vertex)].slots;
  int n = static_cast<int>(ring.size());
  int pos = w.position[static_cast<std::size_t>(s)];
  for (int i = 1; i <= n; ++i) {
    int candidate = ring[static_cast<std::size_t>(((pos + step * i) % n + n) % n)];
    if (w.matched(candidate)) return candidate;
  }
  return kUnmatched;
}

Analysis analyze(const Wiring& w) {
  Analysis a;
  std::size_t n = w.slots.size();
  a.dart_face.assign(n, -1);
  a.corner_face.assign(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (!w.matched(static_cast<int>(s)) || a.dart_face[s] != -1) continue;
    int dart = static_cast<int>(s);
    while (a.dart_face[static_cast<std::size_t>(dart)] == -1) {
      a.dart_face[static_cast<std::size_t>(dart)] = a.faces;
      dart = next_matched(w, w.partner[static_cast<std::size_t>(dart)], +1);
    }
    ++a.faces;
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (w.matched(static_cast<int>(s))) continue;
    int before = next_matched(w, static_cast<int>(s), -1);
    a.corner_face[s] = before == kUnmatched ? a.faces + w.slots[s].vertex
                                            : a.dart_face[static_cast<std::size_t>(w.partner[static_cast<std::size_t>(before)])];
  }
  std::vector<int> parent(w.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  for (std::size_t s = 0; s < n; ++s) {
    if (!w.matched(static_cast<int>(s))) continue;
    int u = find(w.slots[s].vertex);
    int v = find(w.slots[static_cast<std::size_t>(w.partner[s])].vertex);
    parent[static_cast<std::size_t>(u)] = v;
  }
  a.component.resize(w.vertices.size());
  for (std::size_t v = 0; v < w.vertices.size(); ++v) a.component[v] = find(static_cast<int>(v));
  return a;
}

// Every component of the matched part satisfies V - E + F = 2.
bool matched_part_planar(const Wiring& w) {
  Analysis a = analyze(w);
  std::vector<long long> chi(w.vertices.size(), 0);
  std::vector<bool> has_slot(w.vertices.size(), false);
  for (std::size_t v = 0; v < w.vertices.size(); ++v) {
    chi[static_cast<std::size_t>(a.component[v])] += 1;
    for (int s : w.vertices[v].slots) has_slot[v] = has_slot[v] || w.matched(s);
    if (!has_slot[v]) chi[static_cast<std::size_t>(a.component[v])] += 1;  // the face around an isolated vertex
  }
  std::vector<bool> face_seen(static_cast<std::size_t>(a.faces), false);
  for (std::size_t s = 0; s < w.slots.size(); ++s) {
    if (!w.matched(static_cast<int>(s))) continue;
    int c = a.component[static_cast<std::size_t>(w.slots[s].vertex)];
    if (!w.slots[s].incoming) chi[static_cast<std::size_t>(c)] -= 1;
    int f = a.dart_face[s];
    if (!face_seen[static_cast<std::size_t>(f)]) {
      face_seen[static_cast<std::size_t>(f)] = true;
      chi[static_cast<std::size_t>(c)] += 1;
    }
  }
  for (std::size_t v = 0; v < w.vertices.size(); ++v) {
    if (a.component[v] == static_cast<int>(v) && chi[v] != 2) return false;
  }
  return true;
}

struct RouteStep {
  int out_slot;   // outgoing slot of the crossed edge
  bool from_right;  // path enters from the face right of that edge's dart
};

class WiringSearch {
 public:
  WiringSearch(std::uint64_t budget, bool crossings, bool routes_first = false)
      : budget_(budget), crossings_(crossings), routes_first_(routes_first) {}

  std::optional<Wiring> run(Wiring w) {
    if (recurse(w)) return w;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }
  std::size_t best_matched() const { return best_matched_; }

 private:
  bool compatible(const Wiring& w, const Analysis& a, int out, int in) const {
    const Slot& so = w.slots[static_cast<std::size_t>(out)];
    const Slot& si = w.slots[static_cast<std::size_t>(in)];
    if (so.label != si.label || so.incoming || !si.incoming) return false;
    if (w.matched(out) || w.matched(in)) return false;
    if (a.component[static_cast<std::size_t>(so.vertex)] != a.component[static_cast<std::size_t>(si.vertex)]) return true;
    return a.corner_face[static_cast<std::size_t>(out)] == a.corner_face[static_cast<std::size_t>(in)];
  }

  bool same_component(const Wiring& w, const Analysis& a, int x, int y) const {
    return a.component[static_cast<std::size_t>(w.slots[static_cast<std::size_t>(x)].vertex)] ==
           a.component[static_cast<std::size_t>(w.slots[static_cast<std::size_t>(y)].vertex)];
  }

  // Shortest sequence of edges to cross, each with label at distance >= 2.
  std::optional<std::vector<RouteStep>> route(const Wiring& w, const Analysis& a, int out, int in) const {
    int label = w.slots[static_cast<std::size_t>(out)].label;
    int start = a.corner_face[static_cast<std::size_t>(out)];
    int goal = a.corner_face[static_cast<std::size_t>(in)];
    if (start >= a.faces || goal >= a.faces) return std::nullopt;
    std::vector<std::vector<std::pair<int, RouteStep>>> adjacent(static_cast<std::size_t>(a.faces));
    for (std::size_t s = 0; s < w.slots.size(); ++s) {
      if (!w.matched(static_cast<int>(s)) || w.slots[s].incoming) continue;
      if (std::abs(w.slots[s].label - label) < 2) continue;
      int right = a.dart_face[s];
      int left = a.dart_face[static_cast<std::size_t>(w.partner[s])];
      if (right == left) continue;
      adjacent[static_cast<std::size_t>(right)].push_back({left, RouteStep{static_cast<int>(s), true}});
      adjacent[static_cast<std::size_t>(left)].push_back({right, RouteStep{static_cast<int>(s), false}});
    }
    std::vector<int> came_from(static_cast<std::size_t>(a.faces), -1);
    std::vector<RouteStep> via(static_cast<std::size_t>(a.faces), RouteStep{-1, true});
    std::deque<int> queue{start};
    came_from[static_cast<std::size_t>(start)] = start;
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      if (f == goal) break;
      for (const auto& [g, step] : adjacent[static_cast<std::size_t>(f)]) {
        if (came_from[static_cast<std::size_t>(g)] != -1) continue;
        came_from[static_cast<std::size_t>(g)] = f;
        via[static_cast<std::size_t>(g)] = step;
        queue.push_back(g);
      }
    }
    if (came_from[static_cast<std::size_t>(goal)] == -1) return std::nullopt;
    std::vector<RouteStep> steps;
    for (int f = goal; f != start; f = came_from[static_cast<std::size_t>(f)]) steps.push_back(via[static_cast<std::size_t>(f)]);
    std::reverse(steps.begin(), steps.end());
    return steps;
  }

  static Wiring apply_route(Wiring w, int out, int in, const std::vector<RouteStep>& steps) {
    int label = w.slots[static_cast<std::size_t>(out)].label;
    int carry = out;
    for (const RouteStep& step : steps) {
      int a = step.out_slot;
      int b = w.partner[static_cast<std::size_t>(a)];
      int crossed = w.slots[static_cast<std::size_t>(a)].label;
      int c = w.add_vertex(VertexKind::crossing, w.vertices[static_cast<std::size_t>(w.slots[static_cast<std::size_t>(a)].vertex)].order);
      int path_in;
      int path_out;
      int edge_out;
      int edge_in;
      if (step.from_right) {
        path_in = w.add_slot(c, label, true);
        edge_out = w.add_slot(c, crossed, false);
        path_out = w.add_slot(c, label, false);
        edge_in = w.add_slot(c, crossed, true);
      } else {
        path_out = w.add_slot(c, label, false);
        edge_out = w.add_slot(c, crossed, false);
        path_in = w.add_slot(c, label, true);
        edge_in = w.add_slot(c, crossed, true);
      }
      w.disconnect(a, b);
      w.connect(a, edge_in);
      w.connect(edge_out, b);
      w.connect(carry, path_in);
      carry = path_out;
      ++w.crossings;
    }
    w.connect(carry, in);
    return w;
  }

  std::size_t options(const Wiring& w, const Analysis& a, int s, bool& routable) const {
    std::size_t count = 0;
    bool black_option = false;
    routable = false;
    const Slot& slot = w.slots[static_cast<std::size_t>(s)];
    for (std::size_t t = 0; t < w.slots.size(); ++t) {
      int other = static_cast<int>(t);
      const Slot& st = w.slots[t];
      if (st.label != slot.label || st.incoming == slot.incoming || w.matched(other)) continue;
      int out = slot.incoming ? other : s;
      int in = slot.incoming ? s : other;
      if (w.black(other)) {
        black_option = true;
      } else if (compatible(w, a, out, in)) {
        ++count;
      } else if (crossings_) {
        routable = true;
      }
    }
    return count + (black_option ? 1 : 0);
  }

  bool finish(Wiring& w) const {
    std::map<int, std::vector<int>> outs;
    std::map<int, std::vector<int>> ins;
    for (std::size_t s = 0; s < w.slots.size(); ++s) {
      if (w.matched(static_cast<int>(s))) continue;
      (w.slots[s].incoming ? ins : outs)[w.slots[s].label].push_back(static_cast<int>(s));
    }
    for (auto& [label, list] : outs) {
      auto& other = ins[label];
      if (other.size() != list.size()) return false;
      for (std::size_t k = 0; k < list.size(); ++k) w.connect(list[k], other[k]);
    }
    for (const auto& [label, list] : ins) {
      if (outs[label].size() != list.size()) return false;
    }
    return true;
  }

  bool recurse(Wiring& w) {
    if (nodes_ >= budget_) {
      exhausted_ = true;
      return false;
    }
    ++nodes_;
    Analysis a = analyze(w);
    std::size_t matched = static_cast<std::size_t>(std::count_if(w.partner.begin(), w.partner.end(),
                                                                 [](int p) { return p != kUnmatched; }));
    best_matched_ = std::max(best_matched_, matched);

    int chosen = -1;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (std::size_t s = 0; s < w.slots.size(); ++s) {
      int slot = static_cast<int>(s);
      if (w.matched(slot) || w.black(slot)) continue;
      bool routable = false;
      std::size_t count = options(w, a, slot, routable);
      if (count == 0 && !routable) return false;
      std::size_t rank = count == 0 ? fewest - 1 : count;  // route-only slots go after direct ones
      if (rank < fewest) {
        fewest = rank;
        chosen = slot;
      }
    }
    if (chosen == -1) return finish(w);

    const Slot& slot = w.slots[static_cast<std::size_t>(chosen)];
    const SearchVertex& home = w.vertices[static_cast<std::size_t>(slot.vertex)];
    std::vector<int> direct;
    std::vector<int> routed;
    int black_partner = -1;
    for (std::size_t t = 0; t < w.slots.size(); ++t) {
      int other = static_cast<int>(t);
      const Slot& st = w.slots[t];
      if (st.label != slot.label || st.incoming == slot.incoming || w.matched(other)) continue;
      int out = slot.incoming ? other : chosen;
      int in = slot.incoming ? chosen : other;
      if (w.black(other)) {
        if (black_partner == -1) black_partner = other;
      } else if (compatible(w, a, out, in)) {
        direct.push_back(other);
      } else if (crossings_ && same_component(w, a, out, in)) {
        routed.push_back(other);
      }
    }
    auto closeness = [&](int other) {
      const SearchVertex& there = w.vertices[static_cast<std::size_t>(w.slots[static_cast<std::size_t>(other)].vertex)];
      return std::abs(there.order - home.order);
    };
    auto by_closeness = [&](int x, int y) {
      int cx = closeness(x);
      int cy = closeness(y);
      return cx != cy ? cx < cy : x < y;
    };
    std::sort(direct.begin(), direct.end(), by_closeness);
    std::sort(routed.begin(), routed.end(), by_closeness);
    if (black_partner != -1) direct.push_back(black_partner);

    auto try_direct = [&]() {
      for (int other : direct) {
        int out = slot.incoming ? other : chosen;
        int in = slot.incoming ? chosen : other;
        w.connect(out, in);
        if (recurse(w)) return true;
        w.disconnect(out, in);
        if (exhausted_) return false;
      }
      return false;
    };
    if (!routes_first_ && (try_direct() || exhausted_)) return !exhausted_;
    for (int other : routed) {
      int out = slot.incoming ? other : chosen;
      int in = slot.incoming ? chosen : other;
      auto steps = route(w, a, out, in);
      if (!steps) continue;
      Wiring next = apply_route(w, out, in, *steps);
      if (!matched_part_planar(next)) continue;
      if (recurse(next)) {
        w = std::move(next);
        return true;
      }
      if (exhausted_) return false;
    }
    if (routes_first_) return try_direct();
    return false;
  }

  std::uint64_t budget_;
  bool crossings_;
  bool routes_first_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::size_t best_matched_ = 0;
};

Wiring instantiate(const TargetCounts& residual) {
  Wiring w;
  struct Pending {
    VertexKind kind;
    int index;
    Sign sign;
  };
  std::vector<Pending> pending;
  for (const auto& [q, count] : residual.triple) {
    for (Sign sign : {Sign::plus, Sign::minus}) {
      for (std::int64_t k = 0; k < count[sign]; ++k) pending.push_back({VertexKind::white, q, sign});
    }
  }
  for (const auto& [r, count] : residual.singular) {
    for (Sign sign : {Sign::plus, Sign::minus}) {
      for (std::int64_t k = 0; k < count[sign]; ++k) pending.push_back({VertexKind::singular, r, sign});
    }
  }
  for (const auto& [p, count] : residual.branch) {
    for (Sign sign : {Sign::plus, Sign::minus}) {
      for (std::int64_t k = 0; k < count[sign]; ++k) pending.push_back({VertexKind::black, p, sign});
    }
  }
  // Index-sorted sequence with signs alternating inside each index.
  std::stable_sort(pending.begin(), pending.end(), [](const Pending& x, const Pending& y) { return x.index < y.index; });
  for (std::size_t i = 0; i < pending.size(); ++i) {
    const Pending& p = pending[i];
    int v = w.add_vertex(p.kind, static_cast<int>(i));
    switch (p.kind) {
      case VertexKind::white:
        for (const EndSlot& slot : white_template(p.index, p.sign)) w.add_slot(v, slot.label, slot.incoming);
        break;
      case VertexKind::singular:
        w.add_slot(v, p.index, p.sign == Sign::minus);
        w.add_slot(v, p.index, p.sign == Sign::minus);
        break;
      case VertexKind::black:
        w.add_slot(v, p.index, p.sign == Sign::minus);
        break;
      case VertexKind::crossing:
        break;
    }
  }
  return w;
}

Chart to_chart(const Wiring& w, int degree) {
  ChartBuilder b(degree);
  for (const SearchVertex& v : w.vertices) b.add_vertex(v.kind);
  std::vector<std::size_t> edge_of(w.slots.size(), 0);
  for (std::size_t s = 0; s < w.slots.size(); ++s) {
    if (w.slots[s].incoming) continue;
    int in = w.partner[s];
    std::size_t e = b.add_edge(w.slots[s].label, static_cast<std::size_t>(w.slots[s].vertex),
                               static_cast<std::size_t>(w.slots[static_cast<std::size_t>(in)].vertex));
    edge_of[s] = e;
    edge_of[static_cast<std::size_t>(in)] = e;
  }
  for (std::size_t v = 0; v < w.vertices.size(); ++v) {
    std::vector<EdgeEnd> rotation;
    for (int s : w.vertices[v].slots) {
      rotation.push_back({edge_of[static_cast<std::size_t>(s)],
                          w.slots[static_cast<std::size_t>(s)].incoming ? EndSide::head : EndSide::tail});
    }
    b.set_rotation(v, std::move(rotation));
  }
  return b.build();
}

Chart gadget_chart(const PeeledGadget& gadget, int degree) {
  switch (gadget.kind) {
    case GadgetKind::wp: return gadgets::wp(gadget.index, degree);
    case GadgetKind::sp: return gadgets::sp(gadget.index, degree);
    case GadgetKind::fe: return gadgets::fe(gadget.index, degree);
  }
  return Chart{};
}

}  // namespace

Realization realize(const TargetCounts& targets, const RealizeOptions& options) {
  if (!star_holds(targets.as_census())) {
    throw ChartError(ErrorKind::star_violation, "targets violate the per-index balance law");
  }
  if (options.budget == 0) throw ChartError(ErrorKind::precondition, "search budget must be positive");
  NormalizedTargets norm = normalize_targets(targets);
  PeelPlan plan = peel_gadgets(norm.targets);

  Realization result;
  result.shift = norm.shift;
  result.stats.gadgets = plan.gadgets.size();

  Wiring start = instantiate(plan.residual);
  result.stats.residual_vertices = start.vertices.size();
  std::optional<Wiring> wired;
  std::size_t best_matched = 0;
  if (!options.crossings_from_start) {
    WiringSearch search(options.budget, false);
    wired = search.run(start);
    result.stats.nodes += search.nodes();
    best_matched = search.best_matched();
  }
  if (!wired && (options.allow_crossings || options.crossings_from_start)) {
    WiringSearch search(options.budget, true, options.routes_first);
    wired = search.run(start);
    result.stats.nodes += search.nodes();
    result.stats.crossing_pass = true;
    best_matched = std::max(best_matched, search.best_matched());
  }
  if (!wired) {
    throw ChartError(ErrorKind::budget_exhausted,
                     "no planar wiring found after " + std::to_string(result.stats.nodes) + " nodes; best partial state matched " +
                         std::to_string(best_matched) + " of " + std::to_string(start.slots.size()) +
                         " ends over " + std::to_string(start.vertices.size()) + " residual vertices");
  }
  result.stats.crossings_inserted = wired->crossings;

  Chart chart = to_chart(*wired, norm.degree);
  for (const PeeledGadget& gadget : plan.gadgets) chart = disjoint_union(chart, gadget_chart(gadget, norm.degree));
  chart = renumber_ids(chart);
  if (options.emit_coords) chart = with_coords(chart, band_layout(chart));

  if (!verify_realization(norm.targets, chart)) {
    throw ChartError(ErrorKind::precondition, "internal error: synthesized chart failed verification");
  }
  result.chart = std::move(chart);
  return result;
}

bool verify_realization(const TargetCounts& targets, const Chart& chart, int shift) {
  if (!validate(chart).ok()) return false;
  TargetCounts expected = targets_of(targets.as_census().shifted(shift));
  return targets_of(census(chart)) == expected;
}

}  // namespace braidchart
