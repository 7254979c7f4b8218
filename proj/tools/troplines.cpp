// troplines: analyze tropical line arrangements and point sets, render them,
// and sweep configurations for the de Bruijn-Erdos bound.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "troplines/errors.hpp"
#include "troplines/json_io.hpp"
#include "troplines/svg.hpp"
#include "troplines/sweep.hpp"

namespace {

using namespace troplines;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

io::Input read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": invalid JSON: " + e.what());
  }
  return io::parse_input(doc);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out) throw UsageError("write failed for " + path);
}

Arrangement arrangement_of(const io::Input& input) {
  if (const auto* arr = std::get_if<Arrangement>(&input)) return *arr;
  return dualize_points(std::get<PointConfig>(input));
}

json analysis_report(const io::Input& input, const Arrangement& arr,
                     const ArrangementAnalysis& an, const DualSubdivision& sub) {
  json vertices = json::array();
  for (const auto& rec : an.vertices) {
    json cell = json::array();
    for (auto p : rec.cell.vertices) cell.push_back(json::array({p.i, p.j}));
    vertices.push_back({{"point", io::to_json(rec.data.point)},
                        {"type", to_string(type_tuple(arr, rec.data.point))},
                        {"class", to_string(rec.cell.cls)},
                        {"cell", cell}});
  }
  json report{{"input", std::holds_alternative<Arrangement>(input) ? "lines" : "points"},
              {"counts", io::to_json(an.counts)},
              {"vertices", vertices},
              {"near_pencil", is_near_pencil(sub)}};
  json stable = json::array();
  for (const auto& rec : stable_lines_from_dual(an)) stable.push_back(io::to_json(rec));
  if (const auto* cfg = std::get_if<PointConfig>(&input)) {
    report["stable_lines"] = stable;
    if (cfg->size() >= 4) {
      report["dbe"] = io::to_json(dbe_verdict(cfg->size(), stable.size(), is_near_pencil(sub)));
    }
  } else {
    json points = json::array();
    for (const auto& rec : an.vertices) {
      if (rec.cell.cls != CellClass::Triangle) points.push_back(io::to_json(rec.data.point));
    }
    report["stable_intersections"] = points;
  }
  return report;
}

Point2 parse_point_flag(const std::string& text, const std::string& flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError(flag + ": expected x,y");
  try {
    return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tropical line arrangements, stable lines and dual subdivisions"};
  app.require_subcommand(1);

  std::string input_path, output_path, subdivision_path, svg_path;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a lines or points file");
  analyze_cmd->add_option("input", input_path, "JSON input file")->required();
  analyze_cmd->add_option("-o,--output", output_path, "Report file (default: stdout)");
  analyze_cmd->add_option("--subdivision", subdivision_path, "Also write the dual subdivision");
  analyze_cmd->add_option("--svg", svg_path, "Also write an SVG figure");

  auto* render_cmd = app.add_subcommand("render", "Render an arrangement and its subdivision");
  render_cmd->add_option("input", input_path, "JSON input file")->required();
  render_cmd->add_option("-o,--output", svg_path, "SVG file")->required();

  SweepParams params;
  params.jobs = default_jobs();
  std::string mode = "exhaustive";
  std::string jsonl_path, summary_path;
  auto* verify_cmd = app.add_subcommand("verify", "Sweep configurations and check invariants");
  verify_cmd->add_option("--n", params.n, "Points per configuration")->required();
  verify_cmd->add_option("--mode", mode, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  verify_cmd->add_option("--grid", params.grid_size, "Exhaustive grid side");
  verify_cmd->add_option("--samples", params.samples, "Random configurations");
  verify_cmd->add_option("--range", params.coord_range, "Random coordinates in [-range, range]");
  verify_cmd->add_option("--seed", params.seed, "Random seed");
  verify_cmd->add_option("--jobs", params.jobs, "Worker threads (default TROPLINES_JOBS or 1)");
  verify_cmd->add_flag("--canonical-translates", params.canonical_translates,
                       "Skip translates that do not touch both axes");
  verify_cmd->add_option("--jsonl", jsonl_path, "Per-configuration JSONL stream");
  verify_cmd->add_option("--summary", summary_path, "Summary JSON (default: stdout)");

  std::string p1_text, p2_text;
  auto* line_cmd = app.add_subcommand("stable-line", "Stable line through two points");
  line_cmd->add_option("--p1", p1_text, "First point x,y")->required();
  line_cmd->add_option("--p2", p2_text, "Second point x,y")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*analyze_cmd || *render_cmd) {
      const io::Input input = read_input(input_path);
      const Arrangement arr = arrangement_of(input);
      const ArrangementAnalysis an = analyze(arr);
      const DualSubdivision sub = dual_subdivision(arr, an);
      if (*render_cmd) {
        write_file(svg_path, render_svg(arr, an, sub));
        return kOk;
      }
      const std::string report = analysis_report(input, arr, an, sub).dump(2) + "\n";
      if (output_path.empty()) {
        std::cout << report;
      } else {
        write_file(output_path, report);
      }
      if (!subdivision_path.empty()) {
        write_file(subdivision_path, io::subdivision_to_json(sub).dump(2) + "\n");
      }
      if (!svg_path.empty()) write_file(svg_path, render_svg(arr, an, sub));
      return kOk;
    }

    if (*verify_cmd) {
      params.mode = mode == "random" ? SweepMode::Random : SweepMode::Exhaustive;
      validate(params);
      std::ofstream jsonl;
      if (!jsonl_path.empty()) {
        jsonl.open(jsonl_path, std::ios::binary);
        if (!jsonl) throw UsageError("cannot write " + jsonl_path);
      }
      const SweepReport report = run_sweep(params, jsonl_path.empty() ? nullptr : &jsonl);
      const std::string summary = io::summary_to_json(params, report, true).dump(2) + "\n";
      if (summary_path.empty()) {
        std::cout << summary;
      } else {
        write_file(summary_path, summary);
      }
      if (!report.passed()) {
        const auto& v = report.violations.front();
        std::ostringstream pts;
        for (const auto& p : v.points) pts << ' ' << p.to_string();
        std::cerr << "violation: " << v.invariant << " at config " << v.index << ":" << pts.str()
                  << " (" << v.details << ")\n";
        return kViolation;
      }
      return kOk;
    }

    const Point2 p1 = parse_point_flag(p1_text, "--p1");
    const Point2 p2 = parse_point_flag(p2_text, "--p2");
    const TropTriple c = stable_line_coefficients(p1, p2);
    const TropicalLine line = stable_line_two_points(p1, p2);
    std::cout << "coefficients (" << c[0].to_string() << " : " << c[1].to_string() << " : "
              << c[2].to_string() << ")\n"
              << "vertex " << line.vertex().to_string() << "\n";
    return kOk;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
