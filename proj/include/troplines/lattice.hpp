#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "troplines/rational.hpp"

namespace troplines {

/// Integer point (i, j) of the Newton polygon n·Δ₂.
struct LatticePoint {
  int i = 0;
  int j = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.i + b.i, a.j + b.j}; }
  friend LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.i - b.i, a.j - b.j}; }
  friend LatticePoint operator-(LatticePoint a) { return {-a.i, -a.j}; }
};

inline std::int64_t cross(LatticePoint a, LatticePoint b) {
  return static_cast<std::int64_t>(a.i) * b.j - static_cast<std::int64_t>(a.j) * b.i;
}
inline std::int64_t dot(LatticePoint a, LatticePoint b) {
  return static_cast<std::int64_t>(a.i) * b.i + static_cast<std::int64_t>(a.j) * b.j;
}

/// Lattice length of a segment and its primitive direction.
int lattice_length(LatticePoint a, LatticePoint b);
LatticePoint primitive_direction(LatticePoint a, LatticePoint b);

/// Twice the signed area (shoelace), positive for counterclockwise polygons.
std::int64_t twice_signed_area(std::span<const LatticePoint> polygon);

/// True iff q lies in the closed convex CCW polygon.
bool in_convex_polygon(std::span<const LatticePoint> polygon, LatticePoint q);

/// True iff q lies on the closed segment [a, b].
bool on_segment(LatticePoint a, LatticePoint b, LatticePoint q);

/// Lattice points of a closed convex CCW polygon, sorted.
std::vector<LatticePoint> lattice_points_in(std::span<const LatticePoint> polygon);

/// Exact area of the intersection of two convex CCW polygons.
Rational convex_intersection_area(std::span<const LatticePoint> a,
                                  std::span<const LatticePoint> b);

}  // namespace troplines
