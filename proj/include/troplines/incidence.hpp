#pragma once

#include <cstdint>
#include <vector>

#include "troplines/arrangement.hpp"
#include "troplines/line.hpp"
#include "troplines/subdivision.hpp"

namespace troplines {

/// Ordered list of distinct points.
class PointConfig {
 public:
  /// Throws Empty or DuplicateLine ("duplicate point at index k").
  explicit PointConfig(std::vector<Point2> points);

  [[nodiscard]] const std::vector<Point2>& points() const { return points_; }
  [[nodiscard]] std::size_t size() const { return points_.size(); }

 private:
  std::vector<Point2> points_;
};

/// Line k of the result has vertex -points[k].
Arrangement dualize_points(const PointConfig& cfg);

/// p lies on the dual line of q; the symmetric statement is checked too.
bool incidence_preserved(const Point2& p, const Point2& q);

enum class StableKind : std::uint8_t { UniquelyDetermined, VertexWitnessed };
const char* to_string(StableKind kind);

struct StableLineRecord {
  TropicalLine line;
  std::vector<std::size_t> incident;  // sorted point indices, at least two
  StableKind kind = StableKind::UniquelyDetermined;
};

/// One record per stable intersection of the dual arrangement, in the
/// arrangement's vertex order. Throws TooFewPoints for fewer than two points.
std::vector<StableLineRecord> stable_lines_through(const PointConfig& cfg);
/// Same records read off an analysis of the dual arrangement.
std::vector<StableLineRecord> stable_lines_from_dual(const ArrangementAnalysis& dual);

/// Stable line through two points from the tropical Cramer rule applied to
/// rows (x, y, 0). Throws EqualPoints.
TropicalLine stable_line_two_points(const Point2& p1, const Point2& p2);

/// Projective coefficients (a : b : c) from the Cramer rule, before
/// conversion to a vertex.
TropTriple stable_line_coefficients(const Point2& p1, const Point2& p2);

/// Stable lines carrying exactly two of the points.
std::vector<StableLineRecord> ordinary_stable_lines(const PointConfig& cfg);

struct DbeVerdict {
  std::size_t v = 0;
  std::size_t b = 0;
  bool bound_holds = false;
  bool equality = false;
  bool near_pencil = false;
  bool consistent = false;
};

/// Throws TooFewPoints when fewer than four points are given.
DbeVerdict dbe_check(const PointConfig& cfg);
DbeVerdict dbe_verdict(std::size_t v, std::size_t b, bool near_pencil);

}  // namespace troplines
