#include <gtest/gtest.h>

#include <random>

#include "troplines/errors.hpp"
#include "troplines/tropical.hpp"

using namespace troplines;

namespace {

const TropScalar kNegInf = TropScalar::neg_infinity();

TropScalar Q(long n, long d = 1) { return Rational(n, d); }

TropScalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 6);
  std::uniform_int_distribution<int> inf(0, 9);
  if (inf(rng) == 0) return kNegInf;
  return Q(num(rng), den(rng));
}

// Permanent of the 2x2 matrix written out by brute force over both diagonals.
TropScalar brute_permanent(const TropScalar& a, const TropScalar& b, const TropScalar& c,
                           const TropScalar& d) {
  auto plus = [](const TropScalar& x, const TropScalar& y) -> TropScalar {
    if (!x.is_finite() || !y.is_finite()) return kNegInf;
    return x.value() + y.value();
  };
  const TropScalar main = plus(a, d);
  const TropScalar anti = plus(b, c);
  if (!main.is_finite()) return anti;
  if (!anti.is_finite()) return main;
  return main.value() < anti.value() ? anti : main;
}

}  // namespace

TEST(TropAdd, IsMax) {
  EXPECT_EQ(trop_add(3, 5), Q(5));
  EXPECT_EQ(trop_add(kNegInf, Q(7, 2)), Q(7, 2));
  EXPECT_EQ(trop_add(-2, -2), Q(-2));
}

TEST(TropMul, IsSumAbsorbingAtNegInfinity) {
  EXPECT_EQ(trop_mul(3, 5), Q(8));
  EXPECT_EQ(trop_mul(kNegInf, 7), kNegInf);
  EXPECT_EQ(trop_mul(Q(1, 2), Q(1, 3)), Q(5, 6));
}

TEST(TropScalar, NegInfinityPrintsAndOrdersLowest) {
  EXPECT_EQ(kNegInf.to_string(), "-inf");
  EXPECT_LT(kNegInf, Q(-1000000));
  EXPECT_THROW((void)kNegInf.value(), Error);
  EXPECT_EQ(TropScalar(), kNegInf);
}

TEST(TropPermanent, WorkedValues) {
  EXPECT_EQ(trop_permanent_2x2(2, 0, 2, 0), Q(2));
  EXPECT_EQ(trop_permanent_2x2(-3, 0, -1, 0), Q(-1));
  EXPECT_EQ(trop_permanent_2x2(0, kNegInf, kNegInf, 0), Q(0));
}

TEST(TropPermanent, InvariantUnderSimultaneousRowAndColumnSwap) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 1000; ++k) {
    const TropScalar a = random_scalar(rng), b = random_scalar(rng);
    const TropScalar c = random_scalar(rng), d = random_scalar(rng);
    EXPECT_EQ(trop_permanent_2x2(a, b, c, d), trop_permanent_2x2(d, c, b, a));
    EXPECT_EQ(trop_permanent_2x2(a, b, c, d), brute_permanent(a, b, c, d));
  }
}

TEST(Semiring, LawsHoldOnRandomTriples) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 2000; ++k) {
    const TropScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ(trop_add(a, trop_add(b, c)), trop_add(trop_add(a, b), c));
    EXPECT_EQ(trop_add(a, b), trop_add(b, a));
    EXPECT_EQ(trop_add(a, a), a);
    EXPECT_EQ(trop_add(a, kNegInf), a);
    EXPECT_EQ(trop_mul(a, trop_mul(b, c)), trop_mul(trop_mul(a, b), c));
    EXPECT_EQ(trop_mul(a, b), trop_mul(b, a));
    EXPECT_EQ(trop_mul(a, 0), a);
    EXPECT_EQ(trop_mul(a, trop_add(b, c)), trop_add(trop_mul(a, b), trop_mul(a, c)));
  }
}

TEST(Cramer, WorkedInstances) {
  const TropMatrix2x3 worked = {{{-3, 2, 0}, {-1, 2, 0}}};
  EXPECT_EQ(cramer_stable_solution(worked), (TropTriple{Q(2), Q(-1), Q(1)}));
  const TropMatrix2x3 flat = {{{0, 0, 0}, {0, 0, 0}}};
  EXPECT_EQ(cramer_stable_solution(flat), (TropTriple{Q(0), Q(0), Q(0)}));
  const TropMatrix2x3 other = {{{-5, 1, 0}, {-2, 1, 0}}};
  EXPECT_EQ(cramer_stable_solution(other), (TropTriple{Q(1), Q(-2), Q(-1)}));
}

TEST(Cramer, MatchesBruteMinors) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> num(-30, 30);
  for (int k = 0; k < 1000; ++k) {
    TropMatrix2x3 m;
    for (auto& row : m) {
      for (auto& e : row) e = Q(num(rng), 1 + k % 4);
    }
    const TropTriple got = cramer_stable_solution(m);
    EXPECT_EQ(got[0], brute_permanent(m[0][1], m[0][2], m[1][1], m[1][2]));
    EXPECT_EQ(got[1], brute_permanent(m[0][0], m[0][2], m[1][0], m[1][2]));
    EXPECT_EQ(got[2], brute_permanent(m[0][0], m[0][1], m[1][0], m[1][1]));
  }
}

TEST(Cramer, RowShiftShiftsAllOutputs) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> num(-30, 30);
  for (int k = 0; k < 1000; ++k) {
    TropMatrix2x3 m;
    for (auto& row : m) {
      for (auto& e : row) e = Q(num(rng), 3);
    }
    const Rational t(num(rng), 7);
    const int row = k % 2;
    TropMatrix2x3 shifted = m;
    for (auto& e : shifted[row]) e = e.value() + t;
    const TropTriple base = cramer_stable_solution(m);
    const TropTriple moved = cramer_stable_solution(shifted);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(moved[i].value(), base[i].value() + t);
  }
}

TEST(Cramer, RejectsInfiniteEntries) {
  const TropMatrix2x3 m = {{{kNegInf, 0, 0}, {0, 0, 0}}};
  try {
    (void)cramer_stable_solution(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InfiniteEntry);
  }
}
