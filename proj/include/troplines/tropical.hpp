#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>

#include "troplines/rational.hpp"

namespace troplines {

/// Element of the max-plus semiring: a rational or -infinity.
class TropScalar {
 public:
  /// Defaults to -infinity, the additive identity.
  TropScalar() = default;
  TropScalar(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  TropScalar(long value) : value_(Rational(value)) {}       // NOLINT(google-explicit-constructor)
  TropScalar(int value) : value_(Rational(value)) {}        // NOLINT(google-explicit-constructor)

  static TropScalar neg_infinity() { return {}; }

  [[nodiscard]] bool is_finite() const { return value_.has_value(); }
  /// Throws InfiniteEntry when called on -infinity.
  [[nodiscard]] const Rational& value() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const TropScalar&, const TropScalar&) = default;
  /// -infinity orders below every finite value.
  friend std::strong_ordering operator<=>(const TropScalar& a, const TropScalar& b);

 private:
  std::optional<Rational> value_;
};

/// Tropical sum: max(a, b).
TropScalar trop_add(const TropScalar& a, const TropScalar& b);
/// Tropical product: a + b, absorbing at -infinity.
TropScalar trop_mul(const TropScalar& a, const TropScalar& b);

/// max(m11 ⊙ m22, m12 ⊙ m21).
TropScalar trop_permanent_2x2(const TropScalar& m11, const TropScalar& m12,
                              const TropScalar& m21, const TropScalar& m22);

using TropMatrix2x3 = std::array<std::array<TropScalar, 3>, 2>;
using TropTriple = std::array<TropScalar, 3>;

/// Stable solution of the 2×3 tropical linear system with coefficient matrix
/// `c`: entry i is the tropical permanent of `c` with column i deleted. The
/// result is projective (only differences between entries are meaningful).
/// Throws InfiniteEntry if any entry of `c` is -infinity.
TropTriple cramer_stable_solution(const TropMatrix2x3& c);

}  // namespace troplines
