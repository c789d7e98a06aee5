#include "braidchart/validate.hpp"

#include <cstdlib>

#include "braidchart/faces.hpp"

namespace braidchart {
namespace {

void check_white(const Chart& chart, std::size_t v, ValidationReport& report) {
  const Vertex& vertex = chart.vertex(v);
  const auto& rot = vertex.rotation;
  if (!incoming_block_start(chart, v)) {
    report.violations.push_back({vertex.id, "white-template",
                                 "incoming ends are not three cyclically consecutive ends"});
  }
  int first = chart.label(rot[0]);
  int second = chart.label(rot[1]);
  bool alternating = std::abs(first - second) == 1;
  for (std::size_t i = 0; i < rot.size() && alternating; ++i) {
    alternating = chart.label(rot[i]) == (i % 2 == 0 ? first : second);
  }
  if (!alternating) {
    report.violations.push_back({vertex.id, "white-template", "labels do not alternate p, p+1 around the vertex"});
  }
}

void check_crossing(const Chart& chart, std::size_t v, ValidationReport& report) {
  const Vertex& vertex = chart.vertex(v);
  const auto& rot = vertex.rotation;
  bool template_ok = true;
  for (std::size_t i = 0; i < 2; ++i) {
    EdgeEnd a = rot[i];
    EdgeEnd b = rot[i + 2];
    if (chart.label(a) != chart.label(b) || Chart::incoming(a) == Chart::incoming(b)) template_ok = false;
  }
  if (!template_ok) {
    report.violations.push_back({vertex.id, "crossing-template",
                                 "opposite ends must share a label and pass one strand in and out"});
    return;
  }
  int i = chart.label(rot[0]);
  int j = chart.label(rot[1]);
  if (std::abs(i - j) < 2) {
    report.violations.push_back({vertex.id, "crossing-label-gap",
                                 "|i-j| >= 2 violated by labels " + std::to_string(i) + " and " + std::to_string(j)});
  }
}

void check_singular(const Chart& chart, std::size_t v, ValidationReport& report) {
  const Vertex& vertex = chart.vertex(v);
  EdgeEnd a = vertex.rotation[0];
  EdgeEnd b = vertex.rotation[1];
  if (chart.label(a) != chart.label(b) || Chart::incoming(a) != Chart::incoming(b)) {
    report.violations.push_back({vertex.id, "singular-template",
                                 "both ends must carry one label and point the same way"});
  }
}

}  // namespace

bool ValidationReport::has_rule(std::string_view rule) const {
  for (const Violation& v : violations) {
    if (v.rule == rule) return true;
  }
  return false;
}

std::optional<std::size_t> incoming_block_start(const Chart& chart, std::size_t v) {
  const auto& rot = chart.vertex(v).rotation;
  std::size_t n = rot.size();
  for (std::size_t k = 0; k < n; ++k) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      bool want_incoming = i < n / 2;
      ok = Chart::incoming(rot[(k + i) % n]) == want_incoming;
    }
    if (ok) return k;
  }
  return std::nullopt;
}

ValidationReport validate(const Chart& chart) {
  ValidationReport report;
  for (const Edge& e : chart.edges()) {
    if (e.label < 1 || e.label > chart.degree() - 1) {
      report.violations.push_back({e.id, "label-range",
                                   "label " + std::to_string(e.label) + " outside [1, " +
                                       std::to_string(chart.degree() - 1) + "]"});
    }
  }
  for (std::size_t v = 0; v < chart.vertex_count(); ++v) {
    switch (chart.vertex(v).kind) {
      case VertexKind::black: break;
      case VertexKind::white: check_white(chart, v, report); break;
      case VertexKind::crossing: check_crossing(chart, v, report); break;
      case VertexKind::singular: check_singular(chart, v, report); break;
    }
  }
  EulerSummary euler = euler_summary(chart);
  if (!euler.sphere_planar()) {
    std::vector<std::size_t> component = vertex_components(chart);
    for (std::size_t c : euler.nonplanar_components) {
      std::string subject;
      for (std::size_t v = 0; v < chart.vertex_count(); ++v) {
        if (component[v] == c) {
          subject = chart.vertex(v).id;
          break;
        }
      }
      report.violations.push_back({subject, "sphere-planarity",
                                   "component containing this vertex has V - E + F != 2"});
    }
  }
  return report;
}

}  // namespace braidchart
