#include "troplines/arrangement.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "troplines/errors.hpp"

namespace troplines {

Arrangement::Arrangement(std::vector<TropicalLine> lines) : lines_(std::move(lines)) {
  if (lines_.empty()) {
    throw Error(ErrorCode::Empty, "arrangement needs at least one line");
  }
  std::map<Point2, std::size_t> seen;
  for (std::size_t k = 0; k < lines_.size(); ++k) {
    auto [it, inserted] = seen.emplace(lines_[k].vertex(), k);
    if (!inserted) {
      throw Error(ErrorCode::DuplicateLine,
                  "duplicate line at index " + std::to_string(k) + " (same vertex " +
                      lines_[k].vertex().to_string() + " as index " +
                      std::to_string(it->second) + ")");
    }
  }
}

Arrangement build_arrangement(std::vector<TropicalLine> lines) {
  return Arrangement(std::move(lines));
}

VertexData vertex_data(const Arrangement& arr, const Point2& q) {
  VertexData vd;
  vd.point = q;
  vd.per_line_argmax.reserve(arr.size());
  for (const auto& line : arr.lines()) {
    const ArgmaxSet s = argmax_at(line, q);
    vd.per_line_argmax.push_back(s);
    if (s == kAllTerms) {
      ++vd.centered;
    } else if (s == kWestRay) {
      ++vd.on_horizontal;
    } else if (s == kSouthRay) {
      ++vd.on_vertical;
    } else if (s == kNorthEastRay) {
      ++vd.on_diagonal;
    } else {
      ++vd.off_line;
    }
  }
  return vd;
}

const char* to_string(CellClass cls) {
  switch (cls) {
    case CellClass::Triangle: return "triangle";
    case CellClass::Parallelogram: return "parallelogram";
    case CellClass::Hexagon: return "hexagon";
    case CellClass::NonUniform4: return "nonuniform4";
    case CellClass::NonUniform5: return "nonuniform5";
    case CellClass::NonUniform6: return "nonuniform6";
  }
  return "?";
}

CellClass classify_cell(const VertexData& vd) {
  if (!vd.is_vertex()) {
    throw Error(ErrorCode::NotAVertex, "no 2D cell at " + vd.point.to_string());
  }
  const int d = vd.directions();
  if (vd.centered == 1) {
    switch (d) {
      case 0: return CellClass::Triangle;
      case 1: return CellClass::NonUniform4;
      case 2: return CellClass::NonUniform5;
      default: return CellClass::NonUniform6;
    }
  }
  return d == 2 ? CellClass::Parallelogram : CellClass::Hexagon;
}

CellPolygon dual_cell(const Arrangement& arr, const VertexData& vd) {
  CellPolygon cell;
  cell.cls = classify_cell(vd);
  cell.dual_point = vd.point;
  cell.centered = vd.centered;
  cell.on_horizontal = vd.on_horizontal;
  cell.on_vertical = vd.on_vertical;
  cell.on_diagonal = vd.on_diagonal;

  // Lowest-then-leftmost point of the Minkowski sum is the sum of those of
  // the summands; from there the edges follow in counterclockwise angle order.
  LatticePoint start{0, 0};
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const ArgmaxSet s = vd.per_line_argmax[k];
    if (s == kNorthEastRay) {
      start = start + LatticePoint{1, 0};
    } else if (s.size() == 1) {
      if (s.has(Term::X)) start = start + LatticePoint{1, 0};
      if (s.has(Term::Y)) start = start + LatticePoint{0, 1};
    }
  }

  const int c = vd.centered;
  const std::array<std::pair<LatticePoint, int>, 6> edges = {{
      {{1, 0}, c + vd.on_vertical},
      {{0, 1}, vd.on_horizontal},
      {{-1, 1}, c + vd.on_diagonal},
      {{-1, 0}, vd.on_vertical},
      {{0, -1}, c + vd.on_horizontal},
      {{1, -1}, vd.on_diagonal},
  }};
  LatticePoint cur = start;
  for (const auto& [dir, len] : edges) {
    if (len == 0) continue;
    cell.vertices.push_back(cur);
    cur = cur + LatticePoint{dir.i * len, dir.j * len};
  }
  if (cur != start) {
    throw Error(ErrorCode::TilingFailure, "dual cell at " + vd.point.to_string() + " does not close");
  }
  return cell;
}

std::vector<VertexData> arrangement_vertices(const Arrangement& arr) {
  std::vector<Point2> candidates;
  const auto& lines = arr.lines();
  for (const auto& l : lines) candidates.push_back(l.vertex());
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      candidates.push_back(pairwise_stable_intersection(lines[a], lines[b]).point);
      for (auto& p : ray_crossings(lines[a], lines[b])) candidates.push_back(std::move(p));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<VertexData> out;
  for (const auto& q : candidates) {
    VertexData vd = vertex_data(arr, q);
    if (vd.is_vertex()) out.push_back(std::move(vd));
  }
  return out;
}

std::optional<std::string> count_identity_violation(const Counts& c) {
  if (c.t != c.triangles + c.b) return "t != triangles + b";
  if (c.b != c.k + c.h) return "b != k + h";
  if (c.h + c.triangles != c.n) return "h != n - triangles";
  if (c.t < c.n) return "t < n";
  if (c.t > c.n * (c.n - 1) / 2 + c.n) return "t > n(n-1)/2 + n";
  return std::nullopt;
}

ArrangementAnalysis analyze(const Arrangement& arr) {
  ArrangementAnalysis out;
  for (auto& vd : arrangement_vertices(arr)) {
    CellPolygon cell = dual_cell(arr, vd);
    out.vertices.push_back({std::move(vd), std::move(cell)});
  }
  Counts& c = out.counts;
  c.n = arr.size();
  c.t = out.vertices.size();
  for (const auto& rec : out.vertices) {
    if (rec.cell.cls == CellClass::Triangle) {
      ++c.triangles;
    } else if (is_semiuniform(rec.cell.cls)) {
      ++c.k;
    } else {
      ++c.h;
    }
  }
  c.b = c.t - c.triangles;
  if (auto bad = count_identity_violation(c)) {
    throw Error(ErrorCode::InvalidArgument, "count identity failed: " + *bad);
  }
  return out;
}

Counts counts(const Arrangement& arr) { return analyze(arr).counts; }

TypeTuple type_tuple(const Arrangement& arr, const Point2& q) {
  TypeTuple out;
  out.reserve(arr.size());
  for (const auto& line : arr.lines()) out.push_back(argmax_at(line, q));
  return out;
}

std::string to_string(const TypeTuple& type) {
  std::string out = "(";
  for (std::size_t k = 0; k < type.size(); ++k) {
    if (k) out += ", ";
    out += type[k].to_string();
  }
  return out + ")";
}

}  // namespace troplines
