#include "troplines/rational.hpp"

#include <limits>

#include "troplines/errors.hpp"

namespace troplines {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InfiniteEntry: return "InfiniteEntry";
    case ErrorCode::EqualPoints: return "EqualPoints";
    case ErrorCode::IdenticalLines: return "IdenticalLines";
    case ErrorCode::NotTransversal: return "NotTransversal";
    case ErrorCode::DuplicateLine: return "DuplicateLine";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::NotAVertex: return "NotAVertex";
    case ErrorCode::NotATriangle: return "NotATriangle";
    case ErrorCode::TilingFailure: return "TilingFailure";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::GridTooSmall: return "GridTooSmall";
    case ErrorCode::RangeTooSmall: return "RangeTooSmall";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) {
    throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  }
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool is_digit_run(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digit_run(num) || !is_digit_run(den)) {
    throw Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r;
  r.q_ = mpq_class(negative ? mpz_class(-n) : n, d);
  r.q_.canonicalize();
  return r;
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::int64_t Rational::to_int64() const {
  if (!is_integer() || !q_.get_num().fits_slong_p()) {
    throw Error(ErrorCode::InvalidArgument, "rational " + to_string() + " is not a small integer");
  }
  return q_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) {
    throw Error(ErrorCode::InvalidArgument, "division by zero");
  }
  q_ /= o.q_;
  return *this;
}

std::size_t Rational::hash() const {
  const std::size_t h1 = std::hash<std::string>{}(q_.get_num().get_str(16));
  const std::size_t h2 = std::hash<std::string>{}(q_.get_den().get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

}  // namespace troplines
