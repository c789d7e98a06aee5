#include "braidchart/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>

#include "braidchart/census.hpp"
#include "braidchart/chart_io.hpp"
#include "braidchart/classical.hpp"
#include "braidchart/error.hpp"
#include "braidchart/faces.hpp"
#include "braidchart/generator.hpp"
#include "braidchart/identities.hpp"
#include "braidchart/realizer.hpp"
#include "braidchart/svg.hpp"
#include "braidchart/transforms.hpp"
#include "braidchart/validate.hpp"

namespace braidchart {

namespace {

using Json = nlohmann::ordered_json;

// key<TAB>value lines, or one JSON object with the same keys.
class Report {
 public:
  template <typename T>
  void add(const std::string& key, T value) {
    data_[key] = value;
  }
  void write(std::ostream& out, bool json) const {
    if (json) {
      out << data_.dump(2) << '\n';
      return;
    }
    for (const auto& [key, value] : data_.items()) {
      out << key << '\t' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }

 private:
  Json data_ = Json::object();
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::star_violation:
    case ErrorKind::budget_exhausted:
      return 1;
    default:
      return 2;
  }
}

std::string signed_key(char kind, int index, Sign sign) {
  return std::string(1, kind) + "(" + std::to_string(index) + "," + symbol(sign) + ")";
}

void add_table(Report& report, char kind, const SignedTable& table) {
  for (const auto& [p, count] : table) {
    for (Sign s : {Sign::plus, Sign::minus}) {
      if (count[s]) report.add(signed_key(kind, p, s), count[s]);
    }
  }
}

void add_census(Report& report, const Census& c) {
  add_table(report, 'B', c.branch);
  add_table(report, 'T', c.triple);
  add_table(report, 'D', c.singular);
  for (const auto& [p, n] : c.arcs) {
    if (n) report.add("E(" + std::to_string(p) + ")", n);
  }
  for (const auto& [p, n] : c.loops) {
    if (n) report.add("L(" + std::to_string(p) + ")", n);
  }
}

void add_violations(Report& report, const ValidationReport& v) {
  report.add("violations", v.violations.size());
  for (std::size_t i = 0; i < v.violations.size(); ++i) {
    const auto& x = v.violations[i];
    report.add("violation." + std::to_string(i + 1), x.subject + " " + x.rule + " " + x.message);
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

// Loads and validates; an invalid chart is reported and yields exit 1.
std::optional<Chart> load_valid(const std::string& path, bool json, std::ostream& out) {
  Chart chart = parse_chart(read_text_file(path)).chart;
  ValidationReport v = validate(chart);
  if (v.ok()) return chart;
  Report report;
  report.add("status", "invalid");
  add_violations(report, v);
  report.write(out, json);
  return std::nullopt;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Oriented braid charts: census, identities, realization"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit the report as JSON");

  std::string input, output;
  std::vector<std::string> weight_specs;
  std::uint64_t budget = RealizeOptions{}.budget;
  bool no_crossings = false, overlay = false, no_layout = false, reverse_pd = false;
  GenConfig gen;
  int shift = 0;
  std::optional<int> new_degree;

  auto* validate_cmd = app.add_subcommand("validate", "Check chart templates and planarity");
  auto* census_cmd = app.add_subcommand("census", "Signed counts of branch, triple and singular points");
  auto* verify_cmd = app.add_subcommand("verify", "Check the counting identities");
  auto* realize_cmd = app.add_subcommand("realize", "Synthesize a chart for a targets file");
  auto* plan_cmd = app.add_subcommand("plan", "Add the branch points a triple/singular table needs");
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random valid chart");
  auto* render_cmd = app.add_subcommand("render", "Draw a chart as SVG");
  auto* translate_cmd = app.add_subcommand("translate", "Shift every label");
  auto* classical_cmd = app.add_subcommand("classical", "Alexander numbering of a PD diagram");

  for (auto* cmd : {validate_cmd, census_cmd, verify_cmd, render_cmd, translate_cmd}) {
    cmd->add_option("chart", input, "Chart file")->required();
  }
  for (auto* cmd : {realize_cmd, plan_cmd}) cmd->add_option("targets", input, "Targets file")->required();
  classical_cmd->add_option("pd", input, "PD file")->required();
  for (auto* cmd : {realize_cmd, plan_cmd, gen_cmd, render_cmd, translate_cmd}) {
    cmd->add_option("-o,--output", output, "Output file (default stdout)");
  }
  for (auto* cmd : app.get_subcommands({})) cmd->add_flag("--json", json, "Emit the report as JSON");
  verify_cmd->add_option("--weights", weight_specs, "constant:<c> | linear | triangular | explicit:<lo>:<v,...> | random:<seed>:<k>");
  realize_cmd->add_option("--budget", budget, "Backtracking node budget");
  realize_cmd->add_flag("--no-crossings", no_crossings, "Never insert crossing vertices");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--degree", gen.degree, "Chart degree");
  gen_cmd->add_option("--vertices", gen.target_vertices, "Approximate vertex count");
  gen_cmd->add_flag("--singular", gen.allow_singular, "Allow singular vertices");
  gen_cmd->add_flag("--black-free", gen.black_free, "No black vertices");
  render_cmd->add_flag("--overlay", overlay, "Annotate vertices with index and sign");
  render_cmd->add_flag("--no-layout", no_layout, "Fail instead of computing a layout");
  translate_cmd->add_option("--shift", shift, "Label shift")->required();
  translate_cmd->add_option("--degree", new_degree, "Degree of the result");
  classical_cmd->add_flag("--reverse", reverse_pd, "Reverse every component first");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Report report;
    if (validate_cmd->parsed()) {
      Chart chart = parse_chart(read_text_file(input)).chart;
      ValidationReport v = validate(chart);
      EulerSummary euler = euler_summary(chart);
      report.add("status", v.ok() ? "ok" : "invalid");
      report.add("vertices", chart.vertex_count());
      report.add("edges", chart.edge_count());
      report.add("faces", euler.faces);
      report.add("components", euler.components);
      add_violations(report, v);
      report.write(out, json);
      return v.ok() ? 0 : 1;
    }
    if (census_cmd->parsed()) {
      auto chart = load_valid(input, json, out);
      if (!chart) return 1;
      report.add("status", "ok");
      add_census(report, census(*chart));
      report.write(out, json);
      return 0;
    }
    if (verify_cmd->parsed()) {
      auto chart = load_valid(input, json, out);
      if (!chart) return 1;
      Census c = census(*chart);
      if (weight_specs.empty()) weight_specs.push_back("linear");
      std::vector<std::pair<std::string, WeightSequence>> weights;
      for (const auto& spec : weight_specs) {
        auto more = weights_from_spec(spec, c);
        weights.insert(weights.end(), more.begin(), more.end());
      }
      IdentityReport r = verify_identities(c, weights);
      report.add("status", r.ok() ? "verified" : "failed");
      report.add("edge_count", r.edge_count_ok ? "ok" : "fail");
      for (int p : census_labels(c)) {
        report.add("edge_count@" + std::to_string(p), std::to_string(lookup(c.arcs, p)) + " " +
                                                           std::to_string(predicted_arc_starts(c, p)) + " " +
                                                           std::to_string(predicted_arc_ends(c, p)));
      }
      for (const auto& [p, b] : r.star) {
        report.add("star@" + std::to_string(p),
                   std::to_string(b.lhs) + " " + std::to_string(b.rhs) + (b.ok() ? " ok" : " fail"));
      }
      std::int64_t first_nonzero = 0;
      for (const auto& [name, total] : r.weighted_totals) {
        report.add("weighted_total." + name, total);
        if (first_nonzero == 0) first_nonzero = total;
      }
      report.add("weighted_total", first_nonzero);
      for (const auto& cor : r.corollaries) {
        report.add(cor.claim, std::to_string(cor.lhs) + " " + std::to_string(cor.rhs) + (cor.ok ? " ok" : " fail"));
      }
      report.add("immersed", std::string(r.immersed.applicability == Applicability::applicable ? "applicable" : "vacuous") +
                                 (r.immersed.holds ? " ok" : " fail"));
      report.write(out, json);
      return r.ok() ? 0 : 1;
    }
    if (realize_cmd->parsed()) {
      TargetCounts targets = parse_targets(read_text_file(input));
      RealizeOptions options;
      options.budget = budget;
      options.allow_crossings = !no_crossings;
      Realization r = realize(targets, options);
      Chart chart = r.chart;
      int applied = r.shift;
      // Undo the normalizing shift whenever the original labels are usable.
      if (r.shift != 0) {
        int max_label = 0;
        int min_label = chart.edge_count() ? chart.edges().front().label : 1;
        for (const Edge& e : chart.edges()) {
          max_label = std::max(max_label, e.label);
          min_label = std::min(min_label, e.label);
        }
        if (min_label - r.shift >= 1) {
          chart = translate_labels(chart, -r.shift, max_label - r.shift + 1);
          applied = 0;
        }
      }
      if (output.empty()) {
        out << serialize_chart(chart);
        return 0;
      }
      write_text_file(output, serialize_chart(chart));
      report.add("status", "realized");
      report.add("shift", applied);
      report.add("vertices", chart.vertex_count());
      report.add("edges", chart.edge_count());
      report.add("crossings_inserted", r.stats.crossings_inserted);
      report.add("nodes", r.stats.nodes);
      report.write(out, json);
      return 0;
    }
    if (plan_cmd->parsed()) {
      TargetCounts given = parse_targets(read_text_file(input));
      emit(serialize_targets(plan_targets(given.triple, given.singular)), output, out);
      return 0;
    }
    if (gen_cmd->parsed()) {
      emit(serialize_chart(generate(gen)), output, out);
      return 0;
    }
    if (render_cmd->parsed()) {
      auto chart = load_valid(input, json, out);
      if (!chart) return 1;
      SvgOptions options;
      options.overlay = overlay;
      options.allow_layout = !no_layout;
      emit(render_svg(*chart, options), output, out);
      return 0;
    }
    if (translate_cmd->parsed()) {
      ChartDocument doc = parse_chart(read_text_file(input));
      doc.chart = translate_labels(doc.chart, shift, new_degree.value_or(doc.chart.degree() + shift));
      emit(serialize_chart(doc), output, out);
      return 0;
    }
    if (classical_cmd->parsed()) {
      PDDiagram pd = parse_pd(read_text_file(input));
      if (reverse_pd) pd = reverse(pd);
      RegionNumbering numbering = alexander_number(pd);
      bool ok = verify_numbering(pd, numbering);
      report.add("status", ok ? "verified" : "failed");
      report.add("crossings", pd.crossings.size());
      report.add("components", pd.component_count());
      report.add("regions", numbering.regions.size());
      for (std::size_t i = 0; i < numbering.regions.size(); ++i) {
        std::string boundary;
        for (const auto& side : numbering.regions[i].boundary) {
          boundary += (boundary.empty() ? "" : ",") + std::to_string(side.arc) + (side.side == ArcSide::left ? "L" : "R");
        }
        report.add("region." + std::to_string(i), std::to_string(numbering.regions[i].number) + " " + boundary);
      }
      report.write(out, json);
      return ok ? 0 : 1;
    }
  } catch (const ChartError& e) {
    err << "error\t" << to_string(e.kind()) << '\t' << e.what() << '\n';
    return exit_code(e.kind());
  }
  return 2;
}

}  // namespace braidchart
