#include "troplines/tropical.hpp"

#include "troplines/errors.hpp"

namespace troplines {

const Rational& TropScalar::value() const {
  if (!value_) {
    throw Error(ErrorCode::InfiniteEntry, "tropical scalar is -infinity");
  }
  return *value_;
}

std::string TropScalar::to_string() const {
  return value_ ? value_->to_string() : std::string("-inf");
}

std::strong_ordering operator<=>(const TropScalar& a, const TropScalar& b) {
  if (!a.value_ || !b.value_) {
    return a.value_.has_value() <=> b.value_.has_value();
  }
  return *a.value_ <=> *b.value_;
}

TropScalar trop_add(const TropScalar& a, const TropScalar& b) { return a < b ? b : a; }

TropScalar trop_mul(const TropScalar& a, const TropScalar& b) {
  if (!a.is_finite() || !b.is_finite()) return TropScalar::neg_infinity();
  return a.value() + b.value();
}

TropScalar trop_permanent_2x2(const TropScalar& m11, const TropScalar& m12,
                              const TropScalar& m21, const TropScalar& m22) {
  return trop_add(trop_mul(m11, m22), trop_mul(m12, m21));
}

TropTriple cramer_stable_solution(const TropMatrix2x3& c) {
  for (const auto& row : c) {
    for (const auto& entry : row) {
      if (!entry.is_finite()) {
        throw Error(ErrorCode::InfiniteEntry, "stable solution needs a finite coefficient matrix");
      }
    }
  }
  // Column i is dropped; the remaining columns keep their order.
  auto minor = [&c](int drop) {
    const int left = drop == 0 ? 1 : 0;
    const int right = drop == 2 ? 1 : 2;
    return trop_permanent_2x2(c[0][left], c[0][right], c[1][left], c[1][right]);
  };
  return {minor(0), minor(1), minor(2)};
}

}  // namespace troplines
