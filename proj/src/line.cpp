#include "troplines/line.hpp"

#include <algorithm>

#include "troplines/errors.hpp"

namespace troplines {

std::string Point2::to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }

std::string ArgmaxSet::to_string() const {
  std::string out;
  if (has(Term::X)) out += '1';
  if (has(Term::Y)) out += '2';
  if (has(Term::Const)) out += '3';
  return out;
}

const char* to_string(Axis axis) {
  switch (axis) {
    case Axis::West: return "W";
    case Axis::South: return "S";
    case Axis::NorthEast: return "NE";
  }
  return "?";
}

Point2 direction(Axis axis) {
  switch (axis) {
    case Axis::West: return {-1, 0};
    case Axis::South: return {0, -1};
    case Axis::NorthEast: return {1, 1};
  }
  return {0, 0};
}

const char* to_string(IntersectionKind kind) {
  return kind == IntersectionKind::FirstKind ? "first" : "second";
}

std::array<Rational, 3> TropicalLine::coefficients() const {
  return {-vertex_.x, -vertex_.y, Rational(0)};
}

TropicalLine line_from_vertex(const Point2& v) { return TropicalLine(v); }

TropicalLine line_from_coefficients(const TropTriple& abc) {
  const Rational& a = abc[0].value();
  const Rational& b = abc[1].value();
  const Rational& c = abc[2].value();
  return TropicalLine({c - a, c - b});
}

Evaluation eval_argmax(const TropicalLine& line, const Point2& q) {
  const Rational tx = q.x - line.vertex().x;
  const Rational ty = q.y - line.vertex().y;
  const Rational zero(0);
  const Rational& best = std::max({tx, ty, zero});
  std::uint8_t bits = 0;
  if (tx == best) bits |= 0b001;
  if (ty == best) bits |= 0b010;
  if (zero == best) bits |= 0b100;
  return {TropScalar(best), ArgmaxSet::from_bits(bits)};
}

ArgmaxSet argmax_at(const TropicalLine& line, const Point2& q) {
  // Same comparison as eval_argmax without materializing the value.
  const int sx = (q.x - line.vertex().x).sign();
  const Rational dy = q.y - line.vertex().y;
  const int sy = dy.sign();
  if (sx <= 0 && sy <= 0) {
    std::uint8_t bits = 0b100;
    if (sx == 0) bits |= 0b001;
    if (sy == 0) bits |= 0b010;
    return ArgmaxSet::from_bits(bits);
  }
  const auto diff = (q.x - line.vertex().x) <=> dy;
  if (diff == 0) return kNorthEastRay;
  return diff > 0 ? ArgmaxSet::of({Term::X}) : ArgmaxSet::of({Term::Y});
}

bool contains(const TropicalLine& line, const Point2& q) { return argmax_at(line, q).size() >= 2; }

std::optional<Axis> coaxial_points(const Point2& p, const Point2& q) {
  if (p == q) {
    throw Error(ErrorCode::EqualPoints, "coaxiality of a point with itself: " + p.to_string());
  }
  if (p.y == q.y) return Axis::West;
  if (p.x == q.x) return Axis::South;
  if (p.x - q.x == p.y - q.y) return Axis::NorthEast;
  return std::nullopt;
}

std::optional<Point2> cross_rays(const Ray& r1, const Ray& r2) {
  if (r1.axis == r2.axis) return std::nullopt;
  const Point2 d1 = direction(r1.axis);
  const Point2 d2 = direction(r2.axis);
  const Point2 w = r2.origin - r1.origin;
  // Solve s*d1 - t*d2 = w.
  const Rational det = d2.x * d1.y - d1.x * d2.y;
  const Rational s = (d2.x * w.y - d2.y * w.x) / det;
  const Rational t = (d1.x * w.y - d1.y * w.x) / det;
  if (s.sign() < 0 || t.sign() < 0) return std::nullopt;
  return r1.origin + s * d1;
}

std::vector<Point2> ray_crossings(const TropicalLine& l1, const TropicalLine& l2) {
  std::vector<Point2> out;
  for (Axis a1 : kAxes) {
    for (Axis a2 : kAxes) {
      if (auto p = cross_rays({l1.vertex(), a1}, {l2.vertex(), a2})) {
        out.push_back(std::move(*p));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

StableIntersectionResult pairwise_stable_intersection(const TropicalLine& l1,
                                                      const TropicalLine& l2) {
  const Point2& p = l1.vertex();
  const Point2& q = l2.vertex();
  if (p == q) {
    throw Error(ErrorCode::IdenticalLines, "stable intersection of a line with itself at " +
                                               p.to_string());
  }
  if (const auto axis = coaxial_points(p, q)) {
    // The vertex lying on the other line's ray is the limit point; each axis
    // orders the two vertices so exactly one of them qualifies.
    bool p_on_q = false;
    switch (*axis) {
      case Axis::West: p_on_q = p.x < q.x; break;
      case Axis::South: p_on_q = p.y < q.y; break;
      case Axis::NorthEast: p_on_q = p.x > q.x; break;
    }
    return {p_on_q ? p : q, IntersectionKind::SecondKind};
  }
  auto crossings = ray_crossings(l1, l2);
  if (crossings.size() != 1 || crossings.front() == p || crossings.front() == q) {
    throw Error(ErrorCode::NotTransversal,
                "non-coaxial lines " + p.to_string() + " and " + q.to_string() +
                    " without a unique transversal crossing");
  }
  return {std::move(crossings.front()), IntersectionKind::FirstKind};
}

Point2 perturbed_intersection_oracle(const TropicalLine& l1, const TropicalLine& l2,
                                     const Rational& eps, const Point2& dir) {
  const TropicalLine shifted(l2.vertex() + eps * dir);
  if (shifted.vertex() == l1.vertex() || coaxial_points(l1.vertex(), shifted.vertex())) {
    throw Error(ErrorCode::NotTransversal, "shifted line is still coaxial with " +
                                               l1.vertex().to_string());
  }
  auto crossings = ray_crossings(l1, shifted);
  if (crossings.size() != 1) {
    throw Error(ErrorCode::NotTransversal, "shifted pair does not meet in a single point");
  }
  return std::move(crossings.front());
}

}  // namespace troplines
