#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace troplines {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. The wrapper exists so the rest
/// of the library never sees GMP expression templates and so the canonical
/// "p/q" text form is defined in one place.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : q_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den);

  /// Parses "p", "-p", "p/q" or "-p/q". Throws ParseError on anything else
  /// or on a zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] double to_double() const { return q_.get_d(); }
  [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(q_); }

  [[nodiscard]] std::string numerator_string() const { return q_.get_num().get_str(); }
  [[nodiscard]] std::string denominator_string() const { return q_.get_den().get_str(); }

  /// Numerator as a machine integer; only meaningful when is_integer() and the
  /// value fits in int64 (checked).
  [[nodiscard]] std::int64_t to_int64() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  [[nodiscard]] std::size_t hash() const;

 private:
  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace troplines

template <>
struct std::hash<troplines::Rational> {
  std::size_t operator()(const troplines::Rational& r) const noexcept { return r.hash(); }
};
