#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "troplines/arrangement.hpp"
#include "troplines/tropical.hpp"

namespace troplines {

/// Coefficients h(i, j) of the tropical product of the line polynomials,
/// indexed by the lattice points of n·Δ₂.
class LiftTable {
 public:
  LiftTable() = default;
  explicit LiftTable(int n);

  [[nodiscard]] int degree() const { return n_; }
  [[nodiscard]] const TropScalar& at(int i, int j) const { return h_[index(i, j)]; }
  [[nodiscard]] TropScalar& at(int i, int j) { return h_[index(i, j)]; }
  [[nodiscard]] const TropScalar& at(LatticePoint p) const { return at(p.i, p.j); }
  [[nodiscard]] TropScalar& at(LatticePoint p) { return at(p.i, p.j); }
  /// All (i, j) with i, j >= 0 and i + j <= n, i-major.
  [[nodiscard]] std::vector<LatticePoint> points() const;

 private:
  [[nodiscard]] std::size_t index(int i, int j) const;

  int n_ = 0;
  std::vector<TropScalar> h_;
};

/// Dynamic program over the lines: after line k, h(i, j) is the best sum of
/// i x-coefficients, j y-coefficients and the remaining constants.
LiftTable product_coefficients(const Arrangement& arr);

struct DualSubdivision {
  int n = 0;
  std::vector<CellPolygon> cells;
  LiftTable lift;
};

/// Assembles the dual subdivision and checks that it tiles n·Δ₂ (total area,
/// disjoint interiors, vertices inside). Throws TilingFailure otherwise.
DualSubdivision dual_subdivision(const Arrangement& arr);
/// Same, reusing an analysis already computed for `arr`.
DualSubdivision dual_subdivision(const Arrangement& arr, const ArrangementAnalysis& analysis);

/// Empty when the cells tile n·Δ₂, otherwise what went wrong.
std::string tiling_diagnostic(const DualSubdivision& sub);

struct RegularityResult {
  bool regular = true;
  std::string diagnostic;

  explicit operator bool() const { return regular; }
};

/// Every cell must be a facet of the upper hull of the lifted lattice points:
/// its lifted vertices are coplanar, the plane matches h on the cell's
/// lattice points and lies on or above h everywhere else.
RegularityResult check_regularity(const DualSubdivision& sub);

/// Number of cell edges lying on i = 0, j = 0 or i + j = n.
int boundary_edge_count(const CellPolygon& cell, int n);

/// A corner triangle has two edges on the boundary.
bool is_corner_triangle(const CellPolygon& cell, int n);

/// Every triangle has at least one edge on the boundary.
bool is_near_pencil(const DualSubdivision& sub);

/// Indices (into sub.cells) of the semiuniform cells determined by the
/// triangle sub.cells[triangle]: cells sharing an edge with it, plus
/// parallelograms hanging off one of its corners.
///
/// The corner pattern: at a corner p with triangle edges e1, e2 leaving p,
/// a parallelogram with vertex p whose two edges at p run along -e1 and -e2
/// (any lattice lengths). Hexagons never match the corner pattern.
/// Throws NotATriangle.
std::vector<std::size_t> determined_faces(const DualSubdivision& sub, std::size_t triangle);

/// Size of the union of determined_faces over all non-corner triangles.
std::size_t determined_union_count(const DualSubdivision& sub);

/// True iff the segment [a, b] lies on one edge of the cell.
bool shares_edge(const CellPolygon& cell, LatticePoint a, LatticePoint b);

}  // namespace troplines
