#include "braidchart/chart_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "braidchart/error.hpp"

namespace braidchart {

namespace {

[[noreturn]] void fail(std::size_t line, ErrorKind kind, const std::string& message) {
  throw ChartError(kind, "line " + std::to_string(line) + ": " + std::string(to_string(kind)) + ": " + message);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, stop - start));
    start = stop + 1;
  }
  for (auto& line : lines) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

template <typename Int>
std::optional<Int> parse_int(std::string_view s) {
  Int value{};
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::string identifier(std::size_t line, std::string_view s) {
  if (!is_identifier(s)) fail(line, ErrorKind::syntax, "invalid identifier '" + std::string(s) + "'");
  return std::string(s);
}

int integer(std::size_t line, std::string_view s, std::string_view what) {
  auto v = parse_int<int>(s);
  if (!v) fail(line, ErrorKind::syntax, "invalid " + std::string(what) + " '" + std::string(s) + "'");
  return *v;
}

bool is_comment(std::string_view line) {
  auto t = tokens(line);
  return !t.empty() && t.front().front() == '#';
}

bool is_blank(std::string_view line) { return tokens(line).empty(); }

struct Declared {
  std::size_t line = 0;
  std::size_t index = 0;
};

std::string end_string(const Chart& chart, EdgeEnd end) {
  return chart.edge(end.edge).id + (end.side == EndSide::tail ? ":t" : ":h");
}

}  // namespace

ChartDocument parse_chart(std::string_view text) {
  ChartDocument doc;
  auto lines = split_lines(text);

  std::size_t n = 0;
  for (; n < lines.size(); ++n) {
    if (is_blank(lines[n])) continue;
    if (is_comment(lines[n])) {
      doc.comments.emplace_back(trim_right(lines[n]));
      continue;
    }
    break;
  }
  if (n == lines.size()) fail(n == 0 ? 1 : n, ErrorKind::syntax, "missing '%chart 1' header");
  {
    auto t = tokens(lines[n]);
    if (t.size() != 2 || t[0] != "%chart") fail(n + 1, ErrorKind::syntax, "expected '%chart 1' header");
    if (t[1] != "1") fail(n + 1, ErrorKind::syntax, "unsupported format version '" + std::string(t[1]) + "'");
  }

  std::optional<int> degree;
  std::vector<VertexSpec> vertices;
  std::vector<std::size_t> vertex_lines;
  std::map<std::string, Declared> vertex_ids;
  std::vector<EdgeSpec> edges;
  std::vector<std::size_t> edge_lines;
  std::map<std::string, Declared> edge_ids;
  std::vector<RotationSpec> rotations;
  std::vector<std::size_t> rotation_lines;
  std::map<std::string, std::size_t> rotation_of;
  std::vector<CoordSpec> coords;
  std::vector<std::size_t> coord_lines;
  std::set<std::string> coord_of;

  for (std::size_t i = n + 1; i < lines.size(); ++i) {
    const std::size_t ln = i + 1;
    if (is_blank(lines[i])) continue;
    if (is_comment(lines[i])) {
      doc.comments.emplace_back(trim_right(lines[i]));
      continue;
    }
    auto t = tokens(lines[i]);
    const std::string_view key = t[0];
    if (key == "degree") {
      if (t.size() != 2) fail(ln, ErrorKind::syntax, "expected 'degree <n>'");
      if (degree) fail(ln, ErrorKind::syntax, "degree declared twice");
      degree = integer(ln, t[1], "degree");
      if (*degree < 1) fail(ln, ErrorKind::syntax, "degree must be at least 1");
    } else if (key == "vertex") {
      if (t.size() != 3) fail(ln, ErrorKind::syntax, "expected 'vertex <id> <kind>'");
      std::string id = identifier(ln, t[1]);
      auto kind = parse_vertex_kind(t[2]);
      if (!kind) fail(ln, ErrorKind::unknown_kind, "unknown vertex kind '" + std::string(t[2]) + "'");
      if (vertex_ids.count(id)) {
        fail(ln, ErrorKind::duplicate_id,
             "vertex '" + id + "' already declared on line " + std::to_string(vertex_ids[id].line));
      }
      vertex_ids[id] = {ln, vertices.size()};
      vertices.push_back({id, *kind});
      vertex_lines.push_back(ln);
    } else if (key == "edge") {
      if (t.size() != 5) fail(ln, ErrorKind::syntax, "expected 'edge <id> <label> <tail> <head>'");
      std::string id = identifier(ln, t[1]);
      int label = integer(ln, t[2], "label");
      std::string tail = identifier(ln, t[3]);
      std::string head = identifier(ln, t[4]);
      if (edge_ids.count(id)) {
        fail(ln, ErrorKind::duplicate_id,
             "edge '" + id + "' already declared on line " + std::to_string(edge_ids[id].line));
      }
      edge_ids[id] = {ln, edges.size()};
      edges.push_back({id, label, tail, head});
      edge_lines.push_back(ln);
    } else if (key == "rot") {
      if (t.size() != 3) fail(ln, ErrorKind::syntax, "expected 'rot <vertex> <edge>:t|h[,...]'");
      RotationSpec spec;
      spec.vertex = identifier(ln, t[1]);
      std::string_view list = t[2];
      std::size_t start = 0;
      while (true) {
        std::size_t comma = list.find(',', start);
        std::string_view item = list.substr(start, comma == std::string_view::npos ? list.npos : comma - start);
        auto colon = item.find(':');
        if (colon == std::string_view::npos || colon + 2 != item.size() ||
            (item.back() != 't' && item.back() != 'h')) {
          fail(ln, ErrorKind::syntax, "invalid rotation entry '" + std::string(item) + "'");
        }
        spec.ends.push_back({identifier(ln, item.substr(0, colon)), item.back() == 't' ? EndSide::tail : EndSide::head});
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      if (rotation_of.count(spec.vertex)) {
        fail(ln, ErrorKind::duplicate_id,
             "second rotation for vertex '" + spec.vertex + "' (first on line " +
                 std::to_string(rotation_lines[rotation_of[spec.vertex]]) + ")");
      }
      rotation_of[spec.vertex] = rotations.size();
      rotations.push_back(std::move(spec));
      rotation_lines.push_back(ln);
    } else if (key == "coord") {
      if (t.size() != 4) fail(ln, ErrorKind::syntax, "expected 'coord <vertex> <x> <y>'");
      std::string id = identifier(ln, t[1]);
      auto x = Decimal::parse(t[2]);
      auto y = Decimal::parse(t[3]);
      if (!x || !y) fail(ln, ErrorKind::syntax, "invalid decimal coordinate");
      if (!coord_of.insert(id).second) fail(ln, ErrorKind::duplicate_id, "second coord for vertex '" + id + "'");
      coords.push_back({id, Point{*x, *y}});
      coord_lines.push_back(ln);
    } else {
      fail(ln, ErrorKind::syntax, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!degree) fail(lines.size(), ErrorKind::syntax, "missing 'degree' line");

  // Referential checks, reported at the line that introduced the problem.
  std::vector<std::size_t> incident(vertices.size(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (const std::string* end : {&edges[e].tail, &edges[e].head}) {
      auto it = vertex_ids.find(*end);
      if (it == vertex_ids.end()) {
        fail(edge_lines[e], ErrorKind::dangling_reference,
             "edge '" + edges[e].id + "' references undeclared vertex '" + *end + "'");
      }
      ++incident[it->second.index];
    }
  }
  std::set<std::pair<std::string, EndSide>> seen;
  for (std::size_t r = 0; r < rotations.size(); ++r) {
    const auto& spec = rotations[r];
    const std::size_t ln = rotation_lines[r];
    auto vit = vertex_ids.find(spec.vertex);
    if (vit == vertex_ids.end()) {
      fail(ln, ErrorKind::dangling_reference, "rotation for undeclared vertex '" + spec.vertex + "'");
    }
    const VertexSpec& v = vertices[vit->second.index];
    if (spec.ends.size() != valence(v.kind)) {
      fail(ln, ErrorKind::arity_mismatch,
           std::string(to_string(v.kind)) + " vertex '" + v.id + "' needs " + std::to_string(valence(v.kind)) +
               " rotation entries, got " + std::to_string(spec.ends.size()));
    }
    for (const auto& ref : spec.ends) {
      auto eit = edge_ids.find(ref.edge);
      if (eit == edge_ids.end()) {
        fail(ln, ErrorKind::dangling_reference, "rotation references undeclared edge '" + ref.edge + "'");
      }
      const EdgeSpec& e = edges[eit->second.index];
      const std::string& at = ref.side == EndSide::tail ? e.tail : e.head;
      const std::string name = ref.edge + (ref.side == EndSide::tail ? ":t" : ":h");
      if (at != spec.vertex) {
        fail(ln, ErrorKind::dangling_reference, "end " + name + " attaches to '" + at + "', not '" + spec.vertex + "'");
      }
      if (!seen.insert({ref.edge, ref.side}).second) {
        fail(ln, ErrorKind::duplicate_id, "end " + name + " listed twice");
      }
    }
  }
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (!rotation_of.count(vertices[v].id)) {
      fail(vertex_lines[v], ErrorKind::arity_mismatch, "vertex '" + vertices[v].id + "' has no rotation");
    }
    if (incident[v] != valence(vertices[v].kind)) {
      fail(vertex_lines[v], ErrorKind::arity_mismatch,
           std::string(to_string(vertices[v].kind)) + " vertex '" + vertices[v].id + "' has " +
               std::to_string(incident[v]) + " incident edge ends, needs " +
               std::to_string(valence(vertices[v].kind)));
    }
  }
  for (std::size_t c = 0; c < coords.size(); ++c) {
    if (!vertex_ids.count(coords[c].vertex)) {
      fail(coord_lines[c], ErrorKind::dangling_reference, "coord for undeclared vertex '" + coords[c].vertex + "'");
    }
  }

  doc.chart = build_chart(*degree, vertices, edges, rotations, coords);
  return doc;
}

std::string serialize_chart(const ChartDocument& doc) {
  const Chart& chart = doc.chart;
  std::ostringstream out;
  out << "%chart " << doc.version << '\n';
  for (const auto& c : doc.comments) out << trim_right(c) << '\n';
  out << "degree " << chart.degree() << '\n';

  auto by_vertex_id = [&](std::size_t a, std::size_t b) { return chart.vertex(a).id < chart.vertex(b).id; };
  std::vector<std::size_t> vorder(chart.vertex_count());
  for (std::size_t v = 0; v < vorder.size(); ++v) vorder[v] = v;
  std::sort(vorder.begin(), vorder.end(), by_vertex_id);
  std::vector<std::size_t> eorder(chart.edge_count());
  for (std::size_t e = 0; e < eorder.size(); ++e) eorder[e] = e;
  std::sort(eorder.begin(), eorder.end(),
            [&](std::size_t a, std::size_t b) { return chart.edge(a).id < chart.edge(b).id; });

  for (std::size_t v : vorder) out << "vertex " << chart.vertex(v).id << ' ' << to_string(chart.vertex(v).kind) << '\n';
  for (std::size_t e : eorder) {
    const Edge& edge = chart.edge(e);
    out << "edge " << edge.id << ' ' << edge.label << ' ' << chart.vertex(edge.tail).id << ' '
        << chart.vertex(edge.head).id << '\n';
  }
  for (std::size_t v : vorder) {
    std::vector<std::string> ends;
    for (EdgeEnd end : chart.vertex(v).rotation) ends.push_back(end_string(chart, end));
    auto least = std::min_element(ends.begin(), ends.end());
    std::rotate(ends.begin(), least, ends.end());
    out << "rot " << chart.vertex(v).id << ' ';
    for (std::size_t i = 0; i < ends.size(); ++i) out << (i ? "," : "") << ends[i];
    out << '\n';
  }
  for (std::size_t v : vorder) {
    auto it = chart.coords().find(v);
    if (it == chart.coords().end()) continue;
    out << "coord " << chart.vertex(v).id << ' ' << it->second.x.to_string() << ' ' << it->second.y.to_string()
        << '\n';
  }
  return out.str();
}

std::string serialize_chart(const Chart& chart) {
  ChartDocument doc;
  doc.chart = chart;
  return serialize_chart(doc);
}

TargetCounts parse_targets(std::string_view text) {
  TargetCounts targets;
  auto lines = split_lines(text);
  bool header = false;
  std::set<std::tuple<char, int, int>> seen;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t ln = i + 1;
    if (is_blank(lines[i]) || is_comment(lines[i])) continue;
    auto t = tokens(lines[i]);
    if (!header) {
      if (t.size() != 2 || t[0] != "%targets" || t[1] != "1") fail(ln, ErrorKind::syntax, "expected '%targets 1' header");
      header = true;
      continue;
    }
    if (t.size() != 4 || t[0].size() != 1 || (t[2] != "+" && t[2] != "-")) {
      fail(ln, ErrorKind::syntax, "expected 'B|T|D <index> +|- <count>'");
    }
    SignedTable* table = nullptr;
    switch (t[0][0]) {
      case 'B': table = &targets.branch; break;
      case 'T': table = &targets.triple; break;
      case 'D': table = &targets.singular; break;
      default: fail(ln, ErrorKind::unknown_kind, "unknown count kind '" + std::string(t[0]) + "'");
    }
    int index = integer(ln, t[1], "index");
    auto count = parse_int<std::int64_t>(t[3]);
    if (!count || *count < 0) fail(ln, ErrorKind::syntax, "invalid count '" + std::string(t[3]) + "'");
    Sign sign = t[2] == "+" ? Sign::plus : Sign::minus;
    if (!seen.insert({t[0][0], index, value(sign)}).second) {
      fail(ln, ErrorKind::duplicate_id, "entry " + std::string(t[0]) + " " + std::string(t[1]) + " " +
                                            std::string(t[2]) + " given twice");
    }
    (*table)[index][sign] = *count;
  }
  if (!header) fail(lines.empty() ? 1 : lines.size(), ErrorKind::syntax, "missing '%targets 1' header");
  return targets.normalized();
}

std::string serialize_targets(const TargetCounts& targets) {
  std::ostringstream out;
  out << "%targets 1\n";
  const std::pair<char, const SignedTable*> tables[] = {
      {'B', &targets.branch}, {'T', &targets.triple}, {'D', &targets.singular}};
  for (const auto& [kind, table] : tables) {
    for (const auto& [index, count] : *table) {
      if (count.plus) out << kind << ' ' << index << " + " << count.plus << '\n';
      if (count.minus) out << kind << ' ' << index << " - " << count.minus << '\n';
    }
  }
  return out.str();
}

std::vector<std::pair<std::string, WeightSequence>> weights_from_spec(std::string_view spec, const Census& census) {
  auto usage = [&](const std::string& why) -> ChartError {
    return ChartError(ErrorKind::usage, "bad --weights '" + std::string(spec) + "': " + why);
  };
  auto window = required_window(census).value_or(std::pair{0, 1});
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t colon = spec.find(':', start);
    parts.push_back(spec.substr(start, colon == std::string_view::npos ? spec.npos : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  std::vector<std::pair<std::string, WeightSequence>> out;
  const std::string_view kind = parts[0];
  if (kind == "linear" && parts.size() == 1) {
    out.emplace_back("linear", WeightSequence::linear(window.first, window.second));
  } else if (kind == "triangular" && parts.size() == 1) {
    out.emplace_back("triangular", WeightSequence::triangular(window.first, window.second));
  } else if (kind == "constant" && parts.size() == 2) {
    auto c = parse_int<std::int64_t>(parts[1]);
    if (!c) throw usage("constant needs an integer");
    out.emplace_back(std::string(spec), WeightSequence::constant(*c, window.first, window.second));
  } else if (kind == "explicit" && parts.size() == 3) {
    auto lo = parse_int<int>(parts[1]);
    if (!lo) throw usage("explicit needs an integer start index");
    std::vector<std::int64_t> values;
    std::string_view list = parts[2];
    std::size_t s = 0;
    while (true) {
      std::size_t comma = list.find(',', s);
      auto v = parse_int<std::int64_t>(list.substr(s, comma == std::string_view::npos ? list.npos : comma - s));
      if (!v) throw usage("explicit values must be integers");
      values.push_back(*v);
      if (comma == std::string_view::npos) break;
      s = comma + 1;
    }
    out.emplace_back(std::string(spec), WeightSequence(*lo, std::move(values)));
  } else if (kind == "random" && parts.size() == 3) {
    auto seed = parse_int<std::uint64_t>(parts[1]);
    auto k = parse_int<int>(parts[2]);
    if (!seed || !k || *k < 1) throw usage("random needs a seed and a positive count");
    for (int i = 0; i < *k; ++i) {
      out.emplace_back("random:" + std::string(parts[1]) + ":" + std::to_string(i + 1),
                       WeightSequence::random(*seed + static_cast<std::uint64_t>(i), window.first, window.second));
    }
  } else {
    throw usage("expected constant:<c>, linear, triangular, explicit:<lo>:<v0,...> or random:<seed>:<k>");
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ChartError(ErrorKind::usage, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ChartError(ErrorKind::usage, "cannot write '" + path + "'");
  out << text;
}

}  // namespace braidchart
