#pragma once

#include <cstddef>
#include <vector>

#include "braidchart/chart.hpp"

namespace braidchart {

// A dart is named by the edge end it leaves from. A face is the cyclic
// sequence of darts obtained by always turning to the next end
// counterclockwise; this traces the face lying to the right of each dart.
using Face = std::vector<EdgeEnd>;

std::vector<Face> trace_faces(const Chart& chart);

// Connected-component id per vertex, numbered in order of first appearance.
std::vector<std::size_t> vertex_components(const Chart& chart, std::size_t* component_count = nullptr);

struct EulerSummary {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  std::size_t components = 0;
  // Components whose traced V - E + F differs from 2.
  std::vector<std::size_t> nonplanar_components;

  long long characteristic() const {
    return static_cast<long long>(vertices) - static_cast<long long>(edges) + static_cast<long long>(faces);
  }
  bool sphere_planar() const { return nonplanar_components.empty(); }
};

// Sphere planarity is judged per connected component: each one must satisfy
// V - E + F = 2 on its own traced faces.
EulerSummary euler_summary(const Chart& chart);

}  // namespace braidchart
