#include "braidchart/gadgets.hpp"

#include <algorithm>
#include <cstdlib>

#include "braidchart/error.hpp"

namespace braidchart {
namespace {

int pick_degree(int requested, int max_label) { return requested > 0 ? requested : max_label + 1; }

}  // namespace

std::array<EndSlot, 6> white_template(int q, Sign sign) {
  int lower = q - 1;
  if (sign == Sign::plus) {
    return {{{lower, true}, {q, true}, {lower, true}, {q, false}, {lower, false}, {q, false}}};
  }
  return {{{q, true}, {lower, true}, {q, true}, {lower, false}, {q, false}, {lower, false}}};
}

namespace gadgets {

Chart fe(int p, int degree) {
  ChartBuilder b(pick_degree(degree, p));
  std::size_t tail = b.add_vertex(VertexKind::black);
  std::size_t head = b.add_vertex(VertexKind::black);
  std::size_t e = b.add_edge(p, tail, head);
  b.set_rotation(tail, {{e, EndSide::tail}});
  b.set_rotation(head, {{e, EndSide::head}});
  return b.build();
}

Chart sw(int q, Sign sign, int degree) {
  ChartBuilder b(pick_degree(degree, q));
  std::size_t white = b.add_vertex(VertexKind::white);
  std::vector<EdgeEnd> rotation;
  for (const EndSlot& slot : white_template(q, sign)) {
    std::size_t cap = b.add_vertex(VertexKind::black);
    std::size_t e = slot.incoming ? b.add_edge(slot.label, cap, white) : b.add_edge(slot.label, white, cap);
    EndSide at_white = slot.incoming ? EndSide::head : EndSide::tail;
    rotation.push_back({e, at_white});
    b.set_rotation(cap, {{e, opposite(at_white)}});
  }
  b.set_rotation(white, std::move(rotation));
  return b.build();
}

Chart xg(int i, int j, int degree) {
  ChartBuilder b(pick_degree(degree, std::max(i, j)));
  std::size_t crossing = b.add_vertex(VertexKind::crossing);
  std::size_t i_src = b.add_vertex(VertexKind::black);
  std::size_t i_dst = b.add_vertex(VertexKind::black);
  std::size_t j_src = b.add_vertex(VertexKind::black);
  std::size_t j_dst = b.add_vertex(VertexKind::black);
  std::size_t i_in = b.add_edge(i, i_src, crossing);
  std::size_t i_out = b.add_edge(i, crossing, i_dst);
  std::size_t j_in = b.add_edge(j, j_src, crossing);
  std::size_t j_out = b.add_edge(j, crossing, j_dst);
  b.set_rotation(crossing, {{i_in, EndSide::head}, {j_in, EndSide::head}, {i_out, EndSide::tail}, {j_out, EndSide::tail}});
  b.set_rotation(i_src, {{i_in, EndSide::tail}});
  b.set_rotation(i_dst, {{i_out, EndSide::head}});
  b.set_rotation(j_src, {{j_in, EndSide::tail}});
  b.set_rotation(j_dst, {{j_out, EndSide::head}});
  return b.build();
}

Chart sp(int p, int degree) {
  ChartBuilder b(pick_degree(degree, p));
  std::size_t source = b.add_vertex(VertexKind::singular);
  std::size_t sink = b.add_vertex(VertexKind::singular);
  std::size_t first = b.add_edge(p, source, sink);
  std::size_t second = b.add_edge(p, source, sink);
  b.set_rotation(source, {{first, EndSide::tail}, {second, EndSide::tail}});
  b.set_rotation(sink, {{second, EndSide::head}, {first, EndSide::head}});
  return b.build();
}

Chart sb(int p, Sign sign, int degree) {
  ChartBuilder b(pick_degree(degree, p));
  std::size_t singular = b.add_vertex(VertexKind::singular);
  std::vector<EdgeEnd> rotation;
  for (int k = 0; k < 2; ++k) {
    std::size_t cap = b.add_vertex(VertexKind::black);
    bool outward = sign == Sign::plus;
    std::size_t e = outward ? b.add_edge(p, singular, cap) : b.add_edge(p, cap, singular);
    rotation.push_back({e, outward ? EndSide::tail : EndSide::head});
    b.set_rotation(cap, {{e, outward ? EndSide::head : EndSide::tail}});
  }
  b.set_rotation(singular, std::move(rotation));
  return b.build();
}

Chart wp(int q, int degree) {
  ChartBuilder b(pick_degree(degree, q));
  std::size_t positive = b.add_vertex(VertexKind::white);
  std::size_t negative = b.add_vertex(VertexKind::white);
  // The negative vertex lists the six edges in reverse order, which makes
  // the two-vertex map planar and lands on the negative white template.
  std::vector<EdgeEnd> at_positive;
  std::vector<EdgeEnd> at_negative;
  for (const EndSlot& slot : white_template(q, Sign::plus)) {
    std::size_t e = slot.incoming ? b.add_edge(slot.label, negative, positive)
                                  : b.add_edge(slot.label, positive, negative);
    at_positive.push_back({e, slot.incoming ? EndSide::head : EndSide::tail});
    at_negative.insert(at_negative.begin(), {e, slot.incoming ? EndSide::tail : EndSide::head});
  }
  b.set_rotation(positive, std::move(at_positive));
  b.set_rotation(negative, std::move(at_negative));
  return b.build();
}

Chart xx(int i, int j, int degree) {
  if (std::abs(i - j) < 2) {
    throw ChartError(ErrorKind::precondition, "crossing labels must differ by at least 2");
  }
  ChartBuilder b(pick_degree(degree, std::max(i, j)));
  std::size_t left = b.add_vertex(VertexKind::crossing);
  std::size_t right = b.add_vertex(VertexKind::crossing);
  std::size_t i_go = b.add_edge(i, left, right);
  std::size_t i_back = b.add_edge(i, right, left);
  std::size_t j_go = b.add_edge(j, left, right);
  std::size_t j_back = b.add_edge(j, right, left);
  b.set_rotation(left, {{i_back, EndSide::head}, {j_back, EndSide::head}, {i_go, EndSide::tail}, {j_go, EndSide::tail}});
  b.set_rotation(right, {{j_go, EndSide::head}, {i_go, EndSide::head}, {j_back, EndSide::tail}, {i_back, EndSide::tail}});
  return b.build();
}

}  // namespace gadgets
}  // namespace braidchart
