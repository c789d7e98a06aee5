#pragma once

#include <array>

#include "braidchart/chart.hpp"

namespace braidchart {

struct EndSlot {
  int label = 0;
  bool incoming = false;
};

// Counterclockwise end pattern of a white vertex of index q: three incoming
// ends followed by three outgoing ones, labels alternating q-1, q. The middle
// incoming end carries q exactly when the sign is plus.
std::array<EndSlot, 6> white_template(int q, Sign sign);

// Small charts used as fixtures and as building blocks by the realizer and
// the generator. A `degree` of 0 picks the smallest degree that fits.
namespace gadgets {

// Single label-p edge from a positive black to a negative black.
Chart fe(int p, int degree = 0);
// One white vertex with all six ends capped by black vertices.
Chart sw(int q, Sign sign, int degree = 0);
// Arcs of labels i and j crossing once, all four ends capped.
Chart xg(int i, int j, int degree = 0);
// Positive singular vertex joined to a negative one by two label-p edges.
Chart sp(int p, int degree = 0);
// Singular vertex of the given sign with both edges capped by blacks.
Chart sb(int p, Sign sign = Sign::plus, int degree = 0);
// Positive and negative white vertex of index q joined by six edges.
Chart wp(int q, int degree = 0);
// Closed label-i and label-j arcs meeting at two crossings; no endpoints.
Chart xx(int i, int j, int degree = 0);

}  // namespace gadgets
}  // namespace braidchart
