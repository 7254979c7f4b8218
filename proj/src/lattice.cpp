#include "troplines/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace troplines {

int lattice_length(LatticePoint a, LatticePoint b) {
  const LatticePoint d = b - a;
  return std::gcd(std::abs(d.i), std::abs(d.j));
}

LatticePoint primitive_direction(LatticePoint a, LatticePoint b) {
  const LatticePoint d = b - a;
  const int g = std::gcd(std::abs(d.i), std::abs(d.j));
  return g == 0 ? d : LatticePoint{d.i / g, d.j / g};
}

std::int64_t twice_signed_area(std::span<const LatticePoint> polygon) {
  std::int64_t sum = 0;
  const std::size_t n = polygon.size();
  for (std::size_t k = 0; k < n; ++k) {
    sum += cross(polygon[k], polygon[(k + 1) % n]);
  }
  return sum;
}

bool in_convex_polygon(std::span<const LatticePoint> polygon, LatticePoint q) {
  const std::size_t n = polygon.size();
  for (std::size_t k = 0; k < n; ++k) {
    const LatticePoint a = polygon[k];
    const LatticePoint b = polygon[(k + 1) % n];
    if (cross(b - a, q - a) < 0) return false;
  }
  return true;
}

bool on_segment(LatticePoint a, LatticePoint b, LatticePoint q) {
  if (cross(b - a, q - a) != 0) return false;
  return dot(q - a, b - a) >= 0 && dot(q - b, a - b) >= 0;
}

std::vector<LatticePoint> lattice_points_in(std::span<const LatticePoint> polygon) {
  std::vector<LatticePoint> out;
  if (polygon.empty()) return out;
  auto [imin, imax] = std::minmax_element(polygon.begin(), polygon.end(),
                                          [](auto p, auto q) { return p.i < q.i; });
  auto [jmin, jmax] = std::minmax_element(polygon.begin(), polygon.end(),
                                          [](auto p, auto q) { return p.j < q.j; });
  for (int i = imin->i; i <= imax->i; ++i) {
    for (int j = jmin->j; j <= jmax->j; ++j) {
      if (in_convex_polygon(polygon, {i, j})) out.push_back({i, j});
    }
  }
  return out;
}

namespace {

struct RPoint {
  Rational x;
  Rational y;
};

Rational side(const RPoint& a, const RPoint& b, const RPoint& p) {
  return (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
}

}  // namespace

Rational convex_intersection_area(std::span<const LatticePoint> a,
                                  std::span<const LatticePoint> b) {
  // Sutherland-Hodgman: clip a against every half-plane of b.
  std::vector<RPoint> poly;
  poly.reserve(a.size());
  for (auto p : a) poly.push_back({p.i, p.j});
  for (std::size_t k = 0; k < b.size() && !poly.empty(); ++k) {
    const RPoint e0{b[k].i, b[k].j};
    const RPoint e1{b[(k + 1) % b.size()].i, b[(k + 1) % b.size()].j};
    std::vector<RPoint> next;
    for (std::size_t m = 0; m < poly.size(); ++m) {
      const RPoint& cur = poly[m];
      const RPoint& nxt = poly[(m + 1) % poly.size()];
      const Rational sc = side(e0, e1, cur);
      const Rational sn = side(e0, e1, nxt);
      if (sc.sign() >= 0) next.push_back(cur);
      if ((sc.sign() > 0 && sn.sign() < 0) || (sc.sign() < 0 && sn.sign() > 0)) {
        const Rational t = sc / (sc - sn);
        next.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
      }
    }
    poly = std::move(next);
  }
  if (poly.size() < 3) return Rational(0);
  Rational twice(0);
  for (std::size_t m = 0; m < poly.size(); ++m) {
    const RPoint& p = poly[m];
    const RPoint& q = poly[(m + 1) % poly.size()];
    twice += p.x * q.y - p.y * q.x;
  }
  return twice / Rational(2);
}

}  // namespace troplines
