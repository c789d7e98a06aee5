#include "braidchart/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "braidchart/census.hpp"
#include "braidchart/error.hpp"
#include "braidchart/layout.hpp"

namespace braidchart {

namespace {

struct Xy {
  double x = 0;
  double y = 0;
};

std::string num(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << v;
  return out.str();
}

}  // namespace

std::string render_svg(const Chart& chart, const SvgOptions& options) {
  std::map<std::size_t, Point> coords = chart.coords();
  if (coords.size() != chart.vertex_count()) {
    if (!options.allow_layout) {
      throw ChartError(ErrorKind::no_layout, "chart has no coordinates and layout is disabled");
    }
    coords = band_layout(chart);
  }

  const double s = options.scale;
  const double margin = s * 0.75;
  std::vector<Xy> at(chart.vertex_count());
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (std::size_t v = 0; v < at.size(); ++v) {
    at[v] = {coords.at(v).x.to_double() * s, -coords.at(v).y.to_double() * s};
    if (v == 0) {
      min_x = max_x = at[v].x;
      min_y = max_y = at[v].y;
    }
    min_x = std::min(min_x, at[v].x);
    max_x = std::max(max_x, at[v].x);
    min_y = std::min(min_y, at[v].y);
    max_y = std::max(max_y, at[v].y);
  }
  for (auto& p : at) {
    p.x += margin - min_x;
    p.y += margin - min_y;
  }
  const double width = max_x - min_x + 2 * margin;
  const double height = max_y - min_y + 2 * margin;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  out << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
         "markerHeight=\"6\" orient=\"auto\"><polygon points=\"0,0 10,5 0,10\"/></marker></defs>\n";

  // Parallel edges between the same two vertices bend apart.
  std::map<std::pair<std::size_t, std::size_t>, int> multiplicity;
  for (const Edge& e : chart.edges()) ++multiplicity[std::minmax(e.tail, e.head)];
  std::map<std::pair<std::size_t, std::size_t>, int> drawn;
  const double r = s * 0.08;
  for (const Edge& e : chart.edges()) {
    auto key = std::minmax(e.tail, e.head);
    int k = drawn[key]++;
    int m = multiplicity[key];
    Xy a = at[e.tail], b = at[e.head];
    std::string d;
    Xy mid;
    if (e.tail == e.head) {
      double lift = s * (0.4 + 0.2 * k);
      Xy c1{a.x - lift, a.y - lift}, c2{a.x + lift, a.y - lift};
      d = "M " + num(a.x) + ' ' + num(a.y) + " C " + num(c1.x) + ' ' + num(c1.y) + ' ' + num(c2.x) + ' ' +
          num(c2.y) + ' ' + num(b.x) + ' ' + num(b.y);
      mid = {a.x, a.y - 0.75 * lift};
    } else {
      double dx = b.x - a.x, dy = b.y - a.y;
      double len = std::hypot(dx, dy);
      double ux = dx / len, uy = dy / len;
      // Bend measured against the canonical direction so parallel edges fan out.
      double sign = e.tail == key.first ? 1.0 : -1.0;
      double bend = (k - (m - 1) / 2.0) * s * 0.3 * sign;
      Xy c{(a.x + b.x) / 2 - uy * bend, (a.y + b.y) / 2 + ux * bend};
      Xy end{b.x - ux * r, b.y - uy * r};
      if (bend != 0) {
        double ex = b.x - c.x, ey = b.y - c.y, el = std::hypot(ex, ey);
        end = {b.x - ex / el * r, b.y - ey / el * r};
      }
      d = "M " + num(a.x) + ' ' + num(a.y) + " Q " + num(c.x) + ' ' + num(c.y) + ' ' + num(end.x) + ' ' +
          num(end.y);
      mid = {(a.x + 2 * c.x + b.x) / 4, (a.y + 2 * c.y + b.y) / 4};
    }
    out << "<path class=\"edge\" id=\"" << e.id << "\" d=\"" << d
        << "\" fill=\"none\" stroke=\"black\" marker-end=\"url(#arrow)\"/>\n";
    out << "<text class=\"label\" x=\"" << num(mid.x + 4) << "\" y=\"" << num(mid.y - 4)
        << "\" font-size=\"12\">" << e.label << "</text>\n";
  }

  for (std::size_t v = 0; v < chart.vertex_count(); ++v) {
    const Vertex& vx = chart.vertex(v);
    Xy p = at[v];
    switch (vx.kind) {
      case VertexKind::black:
        out << "<circle class=\"vertex black\" id=\"" << vx.id << "\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
            << "\" r=\"" << num(r) << "\" fill=\"black\"/>\n";
        break;
      case VertexKind::white:
        out << "<circle class=\"vertex white\" id=\"" << vx.id << "\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
            << "\" r=\"" << num(r * 1.5) << "\" fill=\"white\" stroke=\"black\"/>\n";
        break;
      case VertexKind::crossing:
        out << "<rect class=\"vertex crossing\" id=\"" << vx.id << "\" x=\"" << num(p.x - r / 2) << "\" y=\""
            << num(p.y - r / 2) << "\" width=\"" << num(r) << "\" height=\"" << num(r)
            << "\" fill=\"gray\"/>\n";
        break;
      case VertexKind::singular:
        out << "<polygon class=\"vertex singular\" id=\"" << vx.id << "\" points=\"" << num(p.x) << ',' << num(p.y - r)
            << ' ' << num(p.x + r) << ',' << num(p.y) << ' ' << num(p.x) << ',' << num(p.y + r) << ' '
            << num(p.x - r) << ',' << num(p.y) << "\" fill=\"white\" stroke=\"black\"/>\n";
        break;
    }
    if (options.overlay && vx.kind != VertexKind::crossing) {
      out << "<text class=\"overlay\" x=\"" << num(p.x + r * 2) << "\" y=\"" << num(p.y + r * 2)
          << "\" font-size=\"11\" fill=\"blue\">" << vertex_index(chart, v) << ',' << symbol(vertex_sign(chart, v))
          << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace braidchart
