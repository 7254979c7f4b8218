#include "troplines/subdivision.hpp"

#include <algorithm>
#include <set>

#include "troplines/errors.hpp"

namespace troplines {

LiftTable::LiftTable(int n) : n_(n), h_(static_cast<std::size_t>(n + 1) * (n + 1)) {}

std::size_t LiftTable::index(int i, int j) const {
  if (i < 0 || j < 0 || i + j > n_) {
    throw Error(ErrorCode::InvalidArgument, "lattice point (" + std::to_string(i) + ", " +
                                                std::to_string(j) + ") outside the Newton polygon");
  }
  return static_cast<std::size_t>(i) * (n_ + 1) + j;
}

std::vector<LatticePoint> LiftTable::points() const {
  std::vector<LatticePoint> out;
  for (int i = 0; i <= n_; ++i) {
    for (int j = 0; i + j <= n_; ++j) out.push_back({i, j});
  }
  return out;
}

LiftTable product_coefficients(const Arrangement& arr) {
  const int n = static_cast<int>(arr.size());
  LiftTable h(n);
  h.at(0, 0) = TropScalar(0);
  for (int k = 0; k < n; ++k) {
    const auto abc = arr[k].coefficients();
    // Degree goes from k to k + 1; sweep downwards so each old entry is read
    // before it is overwritten.
    for (int d = k + 1; d >= 0; --d) {
      for (int i = 0; i <= d; ++i) {
        const int j = d - i;
        TropScalar best;
        if (d <= k) best = trop_mul(h.at(i, j), abc[2]);
        if (i > 0 && d - 1 <= k) best = trop_add(best, trop_mul(h.at(i - 1, j), abc[0]));
        if (j > 0 && d - 1 <= k) best = trop_add(best, trop_mul(h.at(i, j - 1), abc[1]));
        h.at(i, j) = best;
      }
    }
  }
  return h;
}

namespace {

struct Box {
  int i0, i1, j0, j1;
};

Box bounding_box(const CellPolygon& c) {
  Box b{c.vertices[0].i, c.vertices[0].i, c.vertices[0].j, c.vertices[0].j};
  for (auto p : c.vertices) {
    b.i0 = std::min(b.i0, p.i);
    b.i1 = std::max(b.i1, p.i);
    b.j0 = std::min(b.j0, p.j);
    b.j1 = std::max(b.j1, p.j);
  }
  return b;
}

bool interiors_may_overlap(const Box& a, const Box& b) {
  return a.i0 < b.i1 && b.i0 < a.i1 && a.j0 < b.j1 && b.j0 < a.j1;
}

std::string cell_name(const CellPolygon& c) {
  return std::string(to_string(c.cls)) + " at " + c.dual_point.to_string();
}

}  // namespace

std::string tiling_diagnostic(const DualSubdivision& sub) {
  std::int64_t total = 0;
  for (const auto& cell : sub.cells) {
    if (cell.vertices.size() < 3 || cell.twice_area() <= 0) {
      return "degenerate or clockwise " + cell_name(cell);
    }
    for (auto p : cell.vertices) {
      if (p.i < 0 || p.j < 0 || p.i + p.j > sub.n) {
        return cell_name(cell) + " leaves the Newton polygon";
      }
    }
    total += cell.twice_area();
  }
  if (total != static_cast<std::int64_t>(sub.n) * sub.n) {
    return "cell areas sum to " + std::to_string(total) + "/2, expected " +
           std::to_string(sub.n * sub.n) + "/2";
  }
  std::vector<Box> boxes;
  boxes.reserve(sub.cells.size());
  for (const auto& c : sub.cells) boxes.push_back(bounding_box(c));
  for (std::size_t a = 0; a < sub.cells.size(); ++a) {
    for (std::size_t b = a + 1; b < sub.cells.size(); ++b) {
      if (!interiors_may_overlap(boxes[a], boxes[b])) continue;
      const Rational overlap = convex_intersection_area(sub.cells[a].vertices, sub.cells[b].vertices);
      if (overlap.sign() != 0) {
        return cell_name(sub.cells[a]) + " overlaps " + cell_name(sub.cells[b]) + " in area " +
               overlap.to_string();
      }
    }
  }
  return {};
}

DualSubdivision dual_subdivision(const Arrangement& arr, const ArrangementAnalysis& analysis) {
  DualSubdivision sub;
  sub.n = static_cast<int>(arr.size());
  sub.cells.reserve(analysis.vertices.size());
  for (const auto& rec : analysis.vertices) sub.cells.push_back(rec.cell);
  sub.lift = product_coefficients(arr);
  if (auto bad = tiling_diagnostic(sub); !bad.empty()) {
    throw Error(ErrorCode::TilingFailure, bad);
  }
  return sub;
}

DualSubdivision dual_subdivision(const Arrangement& arr) {
  return dual_subdivision(arr, analyze(arr));
}

RegularityResult check_regularity(const DualSubdivision& sub) {
  const auto all_points = sub.lift.points();
  for (std::size_t idx = 0; idx < sub.cells.size(); ++idx) {
    const CellPolygon& cell = sub.cells[idx];
    const auto& v = cell.vertices;
    const LatticePoint p0 = v[0];
    const LatticePoint e1 = v[1] - p0;
    const LatticePoint e2 = v[2] - p0;
    const Rational& z0 = sub.lift.at(p0).value();
    const Rational dz1 = sub.lift.at(v[1]).value() - z0;
    const Rational dz2 = sub.lift.at(v[2]).value() - z0;
    const Rational det(cross(e1, e2));
    const Rational alpha = (dz1 * Rational(e2.j) - dz2 * Rational(e1.j)) / det;
    const Rational beta = (dz2 * Rational(e1.i) - dz1 * Rational(e2.i)) / det;
    const Rational gamma = z0 - alpha * Rational(p0.i) - beta * Rational(p0.j);
    auto plane = [&](LatticePoint p) { return alpha * Rational(p.i) + beta * Rational(p.j) + gamma; };

    for (auto p : all_points) {
      const Rational& hp = sub.lift.at(p).value();
      const Rational zp = plane(p);
      const bool inside = in_convex_polygon(v, p);
      if (inside && hp != zp) {
        return {false, cell_name(cell) + ": lift " + hp.to_string() + " at (" +
                           std::to_string(p.i) + ", " + std::to_string(p.j) +
                           ") is off the cell plane " + zp.to_string()};
      }
      if (!inside && hp > zp) {
        return {false, cell_name(cell) + ": lift at (" + std::to_string(p.i) + ", " +
                           std::to_string(p.j) + ") is above the cell plane"};
      }
    }
  }
  return {};
}

int boundary_edge_count(const CellPolygon& cell, int n) {
  int count = 0;
  const auto& v = cell.vertices;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const LatticePoint a = v[k];
    const LatticePoint b = v[(k + 1) % v.size()];
    if ((a.i == 0 && b.i == 0) || (a.j == 0 && b.j == 0) ||
        (a.i + a.j == n && b.i + b.j == n)) {
      ++count;
    }
  }
  return count;
}

bool is_corner_triangle(const CellPolygon& cell, int n) {
  return cell.cls == CellClass::Triangle && boundary_edge_count(cell, n) == 2;
}

bool is_near_pencil(const DualSubdivision& sub) {
  return std::all_of(sub.cells.begin(), sub.cells.end(), [&](const CellPolygon& c) {
    return c.cls != CellClass::Triangle || boundary_edge_count(c, sub.n) >= 1;
  });
}

bool shares_edge(const CellPolygon& cell, LatticePoint a, LatticePoint b) {
  const auto& v = cell.vertices;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const LatticePoint s0 = v[k];
    const LatticePoint s1 = v[(k + 1) % v.size()];
    if (on_segment(s0, s1, a) && on_segment(s0, s1, b)) return true;
  }
  return false;
}

namespace {

/// The corner pattern: `cell` is a parallelogram with vertex p whose edges at
/// p point along -e1 and -e2.
bool hangs_off_corner(const CellPolygon& cell, LatticePoint p, LatticePoint e1, LatticePoint e2) {
  if (cell.cls != CellClass::Parallelogram) return false;
  const auto& v = cell.vertices;
  const auto it = std::find(v.begin(), v.end(), p);
  if (it == v.end()) return false;
  const std::size_t k = static_cast<std::size_t>(it - v.begin());
  const LatticePoint next = primitive_direction(p, v[(k + 1) % v.size()]);
  const LatticePoint prev = primitive_direction(p, v[(k + v.size() - 1) % v.size()]);
  return (next == -e1 && prev == -e2) || (next == -e2 && prev == -e1);
}

}  // namespace

std::vector<std::size_t> determined_faces(const DualSubdivision& sub, std::size_t triangle) {
  const CellPolygon& tri = sub.cells.at(triangle);
  if (tri.cls != CellClass::Triangle) {
    throw Error(ErrorCode::NotATriangle, cell_name(tri) + " is not a triangle");
  }
  const auto& t = tri.vertices;
  std::vector<std::size_t> out;
  for (std::size_t idx = 0; idx < sub.cells.size(); ++idx) {
    const CellPolygon& cell = sub.cells[idx];
    if (!is_semiuniform(cell.cls)) continue;
    bool determined = false;
    for (std::size_t k = 0; k < 3 && !determined; ++k) {
      const LatticePoint p = t[k];
      const LatticePoint q = t[(k + 1) % 3];
      const LatticePoint r = t[(k + 2) % 3];
      determined = shares_edge(cell, p, q) || hangs_off_corner(cell, p, q - p, r - p);
    }
    if (determined) out.push_back(idx);
  }
  if (out.size() > 6) {
    throw Error(ErrorCode::InvalidArgument, cell_name(tri) + " determines more than six faces");
  }
  return out;
}

std::size_t determined_union_count(const DualSubdivision& sub) {
  std::set<std::size_t> all;
  for (std::size_t idx = 0; idx < sub.cells.size(); ++idx) {
    const CellPolygon& c = sub.cells[idx];
    if (c.cls != CellClass::Triangle || is_corner_triangle(c, sub.n)) continue;
    for (std::size_t f : determined_faces(sub, idx)) all.insert(f);
  }
  return all.size();
}

}  // namespace troplines
