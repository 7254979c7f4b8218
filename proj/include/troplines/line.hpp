#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "troplines/rational.hpp"
#include "troplines/tropical.hpp"

namespace troplines {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
  /// Lexicographic on (x, y).
  friend auto operator<=>(const Point2&, const Point2&) = default;

  friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator-(const Point2& a) { return {-a.x, -a.y}; }
  friend Point2 operator*(const Rational& s, const Point2& p) { return {s * p.x, s * p.y}; }

  [[nodiscard]] std::string to_string() const;
};

/// Terms of a line polynomial max(a + x, b + y, c).
enum class Term : std::uint8_t { X = 1, Y = 2, Const = 3 };

/// Nonempty subset of {1, 2, 3}: the terms attaining the maximum at a point.
class ArgmaxSet {
 public:
  constexpr ArgmaxSet() = default;
  static constexpr ArgmaxSet from_bits(std::uint8_t bits) { return ArgmaxSet(bits); }
  static constexpr ArgmaxSet of(std::initializer_list<Term> terms) {
    std::uint8_t b = 0;
    for (Term t : terms) b |= bit(t);
    return ArgmaxSet(b);
  }

  [[nodiscard]] constexpr bool has(Term t) const { return (bits_ & bit(t)) != 0; }
  [[nodiscard]] constexpr int size() const {
    return ((bits_ >> 0) & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1);
  }
  [[nodiscard]] constexpr std::uint8_t bits() const { return bits_; }
  /// Compact form such as "13" or "123".
  [[nodiscard]] std::string to_string() const;

  friend constexpr bool operator==(ArgmaxSet, ArgmaxSet) = default;

 private:
  constexpr explicit ArgmaxSet(std::uint8_t bits) : bits_(bits) {}
  static constexpr std::uint8_t bit(Term t) {
    return static_cast<std::uint8_t>(1U << (static_cast<unsigned>(t) - 1));
  }

  std::uint8_t bits_ = 0;
};

/// The three argmax sets that occur on open rays.
inline constexpr ArgmaxSet kWestRay = ArgmaxSet::of({Term::Y, Term::Const});
inline constexpr ArgmaxSet kSouthRay = ArgmaxSet::of({Term::X, Term::Const});
inline constexpr ArgmaxSet kNorthEastRay = ArgmaxSet::of({Term::X, Term::Y});
inline constexpr ArgmaxSet kAllTerms = ArgmaxSet::of({Term::X, Term::Y, Term::Const});

/// Ray directions of a tropical line: (-1,0), (0,-1), (1,1).
enum class Axis : std::uint8_t { West, South, NorthEast };

inline constexpr std::array<Axis, 3> kAxes = {Axis::West, Axis::South, Axis::NorthEast};

const char* to_string(Axis axis);
Point2 direction(Axis axis);

/// Max-plus line max(a + x, b + y, c), stored by its vertex (c - a, c - b).
class TropicalLine {
 public:
  TropicalLine() = default;
  explicit TropicalLine(Point2 vertex) : vertex_(std::move(vertex)) {}

  [[nodiscard]] const Point2& vertex() const { return vertex_; }
  /// Coefficients normalized to c = 0, i.e. (-vertex.x, -vertex.y, 0).
  [[nodiscard]] std::array<Rational, 3> coefficients() const;

  friend bool operator==(const TropicalLine&, const TropicalLine&) = default;
  friend auto operator<=>(const TropicalLine&, const TropicalLine&) = default;

 private:
  Point2 vertex_;
};

TropicalLine line_from_vertex(const Point2& v);

/// Line through the projective coefficient triple (a : b : c); all finite.
TropicalLine line_from_coefficients(const TropTriple& abc);

struct Evaluation {
  TropScalar value;
  ArgmaxSet argmax;
};

/// Value of the normalized line polynomial at q and the attaining terms.
Evaluation eval_argmax(const TropicalLine& line, const Point2& q);
ArgmaxSet argmax_at(const TropicalLine& line, const Point2& q);

/// True iff q is on the closed tropical line (maximum attained at least twice).
bool contains(const TropicalLine& line, const Point2& q);

/// Axis shared by two distinct points, if any. Throws EqualPoints if p == q.
std::optional<Axis> coaxial_points(const Point2& p, const Point2& q);

enum class IntersectionKind : std::uint8_t { FirstKind, SecondKind };
const char* to_string(IntersectionKind kind);

struct StableIntersectionResult {
  Point2 point;
  IntersectionKind kind = IntersectionKind::FirstKind;
};

/// Stable intersection of two distinct lines. Throws IdenticalLines if the
/// vertices coincide.
StableIntersectionResult pairwise_stable_intersection(const TropicalLine& l1,
                                                      const TropicalLine& l2);

/// Closed ray vertex + s * direction(axis), s >= 0.
struct Ray {
  Point2 origin;
  Axis axis;
};

/// Intersection of two closed rays with different axes (a single point or
/// nothing). Rays sharing an axis return nullopt.
std::optional<Point2> cross_rays(const Ray& r1, const Ray& r2);

/// All points where the rays of two lines cross transversally, sorted and
/// deduplicated. Overlapping collinear rays are not reported.
std::vector<Point2> ray_crossings(const TropicalLine& l1, const TropicalLine& l2);

/// Intersection of l1 with l2 translated by eps * dir. Throws NotTransversal
/// when the shifted pair is still coaxial (the intersection is not a point).
Point2 perturbed_intersection_oracle(const TropicalLine& l1, const TropicalLine& l2,
                                     const Rational& eps, const Point2& dir);

}  // namespace troplines
