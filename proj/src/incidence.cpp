#include "troplines/incidence.hpp"

#include <map>

#include "troplines/errors.hpp"

namespace troplines {

PointConfig::PointConfig(std::vector<Point2> points) : points_(std::move(points)) {
  if (points_.empty()) {
    throw Error(ErrorCode::Empty, "point configuration needs at least one point");
  }
  std::map<Point2, std::size_t> seen;
  for (std::size_t k = 0; k < points_.size(); ++k) {
    auto [it, inserted] = seen.emplace(points_[k], k);
    if (!inserted) {
      throw Error(ErrorCode::DuplicateLine, "duplicate point at index " + std::to_string(k) +
                                                " (equal to index " +
                                                std::to_string(it->second) + ")");
    }
  }
}

Arrangement dualize_points(const PointConfig& cfg) {
  std::vector<TropicalLine> lines;
  lines.reserve(cfg.size());
  for (const auto& p : cfg.points()) lines.push_back(line_from_vertex(-p));
  return Arrangement(std::move(lines));
}

bool incidence_preserved(const Point2& p, const Point2& q) {
  const bool forward = contains(line_from_vertex(-q), p);
  const bool backward = contains(line_from_vertex(-p), q);
  if (forward != backward) {
    throw Error(ErrorCode::InvalidArgument,
                "duality broke incidence for " + p.to_string() + " and " + q.to_string());
  }
  return forward;
}

const char* to_string(StableKind kind) {
  return kind == StableKind::UniquelyDetermined ? "uniquely_determined" : "vertex_witnessed";
}

std::vector<StableLineRecord> stable_lines_from_dual(const ArrangementAnalysis& dual) {
  std::vector<StableLineRecord> out;
  for (const auto& rec : dual.vertices) {
    if (rec.cell.cls == CellClass::Triangle) continue;
    StableLineRecord r;
    r.line = line_from_vertex(-rec.data.point);
    for (std::size_t k = 0; k < rec.data.per_line_argmax.size(); ++k) {
      if (rec.data.per_line_argmax[k].size() >= 2) r.incident.push_back(k);
    }
    r.kind = rec.data.centered == 1 ? StableKind::VertexWitnessed : StableKind::UniquelyDetermined;
    if (r.incident.size() < 2) {
      throw Error(ErrorCode::InvalidArgument,
                  "stable line " + r.line.vertex().to_string() + " carries fewer than two points");
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<StableLineRecord> stable_lines_through(const PointConfig& cfg) {
  if (cfg.size() < 2) {
    throw Error(ErrorCode::TooFewPoints, "stable lines need at least two points");
  }
  return stable_lines_from_dual(analyze(dualize_points(cfg)));
}

TropTriple stable_line_coefficients(const Point2& p1, const Point2& p2) {
  if (p1 == p2) {
    throw Error(ErrorCode::EqualPoints, "stable line through a doubled point " + p1.to_string());
  }
  const TropMatrix2x3 rows = {{{p1.x, p1.y, TropScalar(0)}, {p2.x, p2.y, TropScalar(0)}}};
  return cramer_stable_solution(rows);
}

TropicalLine stable_line_two_points(const Point2& p1, const Point2& p2) {
  const TropicalLine line = line_from_coefficients(stable_line_coefficients(p1, p2));
  if (!contains(line, p1) || !contains(line, p2)) {
    throw Error(ErrorCode::InvalidArgument, "Cramer line " + line.vertex().to_string() +
                                                " misses one of its defining points");
  }
  return line;
}

std::vector<StableLineRecord> ordinary_stable_lines(const PointConfig& cfg) {
  std::vector<StableLineRecord> out;
  for (auto& r : stable_lines_through(cfg)) {
    if (r.incident.size() == 2) out.push_back(std::move(r));
  }
  return out;
}

DbeVerdict dbe_verdict(std::size_t v, std::size_t b, bool near_pencil) {
  DbeVerdict d;
  d.v = v;
  d.b = b;
  d.bound_holds = b + 3 >= v;
  d.equality = b + 3 == v;
  d.near_pencil = near_pencil;
  d.consistent = !d.equality || near_pencil;
  return d;
}

DbeVerdict dbe_check(const PointConfig& cfg) {
  if (cfg.size() < 4) {
    throw Error(ErrorCode::TooFewPoints, "the de Bruijn-Erdos check needs at least four points");
  }
  const Arrangement arr = dualize_points(cfg);
  const ArrangementAnalysis analysis = analyze(arr);
  const std::size_t b = stable_lines_from_dual(analysis).size();
  const DualSubdivision sub = dual_subdivision(arr, analysis);
  return dbe_verdict(cfg.size(), b, is_near_pencil(sub));
}

}  // namespace troplines
