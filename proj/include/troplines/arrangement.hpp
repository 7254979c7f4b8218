#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "troplines/lattice.hpp"
#include "troplines/line.hpp"

namespace troplines {

/// Ordered list of distinct tropical lines.
class Arrangement {
 public:
  /// Throws Empty for an empty list and DuplicateLine (naming both indices)
  /// when two lines share a vertex.
  explicit Arrangement(std::vector<TropicalLine> lines);

  [[nodiscard]] const std::vector<TropicalLine>& lines() const { return lines_; }
  [[nodiscard]] std::size_t size() const { return lines_.size(); }
  [[nodiscard]] const TropicalLine& operator[](std::size_t k) const { return lines_[k]; }

 private:
  std::vector<TropicalLine> lines_;
};

Arrangement build_arrangement(std::vector<TropicalLine> lines);

/// Local data of the arrangement at a point.
///
/// Ray counts are grouped by the direction of the ray through the point:
/// `on_horizontal` counts lines whose west ray passes through (argmax {2,3}),
/// `on_vertical` their south ray ({1,3}) and `on_diagonal` their north-east
/// ray ({1,2}). These are the three edge-length parameters of the dual cell;
/// `centered` (0 or 1) is the number of lines with their vertex at the point.
struct VertexData {
  Point2 point;
  std::vector<ArgmaxSet> per_line_argmax;
  int centered = 0;
  int on_horizontal = 0;
  int on_vertical = 0;
  int on_diagonal = 0;
  int off_line = 0;

  /// Number of nonzero ray-direction counts.
  [[nodiscard]] int directions() const {
    return (on_horizontal > 0) + (on_vertical > 0) + (on_diagonal > 0);
  }
  /// The point carries a 2D cell of the dual subdivision.
  [[nodiscard]] bool is_vertex() const { return centered == 1 || directions() >= 2; }
};

VertexData vertex_data(const Arrangement& arr, const Point2& q);

enum class CellClass : std::uint8_t {
  Triangle,
  Parallelogram,
  Hexagon,
  NonUniform4,
  NonUniform5,
  NonUniform6,
};

const char* to_string(CellClass cls);
inline bool is_semiuniform(CellClass c) {
  return c == CellClass::Parallelogram || c == CellClass::Hexagon;
}
inline bool is_nonuniform(CellClass c) {
  return c == CellClass::NonUniform4 || c == CellClass::NonUniform5 || c == CellClass::NonUniform6;
}

/// Throws NotAVertex if the point carries no 2D cell.
CellClass classify_cell(const VertexData& vd);

/// 2D cell of the dual subdivision, positioned in n·Δ₂.
struct CellPolygon {
  std::vector<LatticePoint> vertices;  // counterclockwise, no collinear triples
  CellClass cls = CellClass::Triangle;
  Point2 dual_point;
  int centered = 0;
  int on_horizontal = 0;
  int on_vertical = 0;
  int on_diagonal = 0;

  [[nodiscard]] std::int64_t twice_area() const { return twice_signed_area(vertices); }
};

/// Minkowski sum over lines of the hull of each line's argmax exponents
/// (x ↦ (1,0), y ↦ (0,1), const ↦ (0,0)). Throws NotAVertex.
CellPolygon dual_cell(const Arrangement& arr, const VertexData& vd);

/// Arrangement vertices (points carrying a 2D dual cell), sorted
/// lexicographically.
std::vector<VertexData> arrangement_vertices(const Arrangement& arr);

struct Counts {
  std::size_t n = 0;
  std::size_t t = 0;
  std::size_t triangles = 0;
  std::size_t b = 0;
  std::size_t k = 0;
  std::size_t h = 0;

  friend bool operator==(const Counts&, const Counts&) = default;
};

/// Empty when all count identities hold, otherwise a description.
std::optional<std::string> count_identity_violation(const Counts& c);

struct VertexRecord {
  VertexData data;
  CellPolygon cell;
};

/// Everything the face statistics need, computed once.
struct ArrangementAnalysis {
  std::vector<VertexRecord> vertices;
  Counts counts;
};

/// Throws Error(InvalidArgument) if a count identity fails (a bug signal).
ArrangementAnalysis analyze(const Arrangement& arr);
Counts counts(const Arrangement& arr);

using TypeTuple = std::vector<ArgmaxSet>;
TypeTuple type_tuple(const Arrangement& arr, const Point2& q);
std::string to_string(const TypeTuple& type);

}  // namespace troplines
