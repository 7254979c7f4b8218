#include "troplines/json_io.hpp"

#include "troplines/errors.hpp"

namespace troplines::io {

json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, field + ": " + e.what());
    }
  }
  throw Error(ErrorCode::Parse, field + ": expected an integer or a \"p/q\" string");
}

json to_json(const Point2& p) { return json::array({to_json(p.x), to_json(p.y)}); }

Point2 point_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) {
    throw Error(ErrorCode::Parse, field + ": expected a pair [x, y]");
  }
  return {rational_from_json(j[0], field + "[0]"), rational_from_json(j[1], field + "[1]")};
}

json to_json(const TropicalLine& line) { return json{{"vertex", to_json(line.vertex())}}; }

json to_json(const DbeVerdict& v) {
  return json{{"v", v.v},
              {"b", v.b},
              {"bound_holds", v.bound_holds},
              {"equality", v.equality},
              {"near_pencil", v.near_pencil},
              {"consistent", v.consistent}};
}

json to_json(const StableLineRecord& r) {
  return json{{"vertex", to_json(r.line.vertex())},
              {"incident", r.incident},
              {"kind", to_string(r.kind)}};
}

json to_json(const Counts& c) {
  return json{{"n", c.n}, {"t", c.t}, {"triangles", c.triangles},
              {"b", c.b}, {"k", c.k}, {"h", c.h}};
}

json subdivision_to_json(const DualSubdivision& sub) {
  json cells = json::array();
  for (const auto& cell : sub.cells) {
    json verts = json::array();
    for (auto p : cell.vertices) verts.push_back(json::array({p.i, p.j}));
    cells.push_back({{"vertices", verts},
                     {"class", to_string(cell.cls)},
                     {"dual_point", to_json(cell.dual_point)},
                     {"boundary_edges", boundary_edge_count(cell, sub.n)}});
  }
  json lift = json::array();
  for (auto p : sub.lift.points()) {
    lift.push_back(json::array({p.i, p.j, sub.lift.at(p).to_string()}));
  }
  return json{{"n", sub.n}, {"cells", cells}, {"lift", lift}};
}

json to_json(const ConfigResult& r) {
  json points = json::array();
  for (const auto& p : r.points) points.push_back(to_json(p));
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"invariant", v.invariant}, {"details", v.details}});
  }
  return json{{"index", r.index},
              {"points", points},
              {"t", r.counts.t},
              {"triangles", r.counts.triangles},
              {"b", r.counts.b},
              {"k", r.counts.k},
              {"h", r.counts.h},
              {"near_pencil", r.near_pencil},
              {"regular", r.regular},
              {"violations", violations}};
}

json summary_to_json(const SweepParams& params, const SweepReport& report, bool include_elapsed) {
  json hist = json::object();
  for (const auto& [key, count] : report.histogram) hist[std::to_string(key)] = count;
  json violations = json::array();
  for (const auto& v : report.violations) {
    json points = json::array();
    for (const auto& p : v.points) points.push_back(to_json(p));
    violations.push_back({{"index", v.index},
                          {"points", points},
                          {"invariant", v.invariant},
                          {"details", v.details}});
  }
  json mode = params.mode == SweepMode::Exhaustive
                  ? json{{"kind", "exhaustive"}, {"grid", params.grid_size}}
                  : json{{"kind", "random"},
                         {"samples", params.samples},
                         {"range", params.coord_range},
                         {"seed", params.seed}};
  json out{{"n", params.n},
           {"mode", mode},
           {"configs_tested", report.configs_tested},
           {"passed", report.passed()},
           {"histogram", hist},
           {"violations", violations}};
  if (include_elapsed) out["elapsed_seconds"] = report.elapsed.count();
  return out;
}

Input parse_input(const json& doc) {
  if (!doc.is_object()) {
    throw Error(ErrorCode::Parse, "input: expected a JSON object with \"lines\" or \"points\"");
  }
  const bool has_lines = doc.contains("lines");
  const bool has_points = doc.contains("points");
  if (has_lines == has_points) {
    throw Error(ErrorCode::Parse, "input: expected exactly one of \"lines\" or \"points\"");
  }
  if (has_lines) {
    const json& arr = doc["lines"];
    if (!arr.is_array()) throw Error(ErrorCode::Parse, "lines: expected an array");
    std::vector<TropicalLine> lines;
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string field = "lines[" + std::to_string(k) + "]";
      if (!arr[k].is_object() || !arr[k].contains("vertex")) {
        throw Error(ErrorCode::Parse, field + ": expected {\"vertex\": [x, y]}");
      }
      lines.push_back(line_from_vertex(point_from_json(arr[k]["vertex"], field + ".vertex")));
    }
    return Arrangement(std::move(lines));
  }
  const json& arr = doc["points"];
  if (!arr.is_array()) throw Error(ErrorCode::Parse, "points: expected an array");
  std::vector<Point2> points;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    points.push_back(point_from_json(arr[k], "points[" + std::to_string(k) + "]"));
  }
  return PointConfig(std::move(points));
}

}  // namespace troplines::io
