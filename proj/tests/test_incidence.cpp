#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "troplines/errors.hpp"
#include "troplines/incidence.hpp"

using namespace troplines;
using oracle::P;
using oracle::R;

namespace {

PointConfig config(std::vector<Point2> pts) { return PointConfig(std::move(pts)); }

PointConfig random_config(std::mt19937_64& rng, int n, long range) {
  std::uniform_int_distribution<long> c(-range, range);
  std::set<Point2> seen;
  std::vector<Point2> pts;
  while (static_cast<int>(pts.size()) < n) {
    const Point2 p = P(c(rng), c(rng));
    if (seen.insert(p).second) pts.push_back(p);
  }
  return PointConfig(std::move(pts));
}

}  // namespace

TEST(PointConfig, RejectsDuplicatesAndEmpty) {
  try {
    (void)config({P(0, 0), P(1, 1), P(0, 0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicateLine);
    EXPECT_NE(std::string(e.what()).find("duplicate point at index 2"), std::string::npos);
  }
  EXPECT_THROW((void)config({}), Error);
}

TEST(DualizePoints, NegatesCoordinates) {
  EXPECT_EQ(dualize_points(config({P(0, 0)}))[0].vertex(), P(0, 0));
  EXPECT_EQ(dualize_points(config({P(1, -2)}))[0].vertex(), P(-1, 2));
  const auto arr = dualize_points(config(oracle::kNearPencilPoints));
  EXPECT_EQ(oracle::vertices_of(arr), (std::vector<Point2>{P(0, 0), P(0, 2), P(2, 0), P(-2, -2)}));
}

TEST(DualizePoints, TwiceIsIdentity) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 50; ++k) {
    const PointConfig cfg = random_config(rng, 5, 9);
    const auto once = oracle::vertices_of(dualize_points(cfg));
    const auto twice = oracle::vertices_of(dualize_points(PointConfig(once)));
    EXPECT_EQ(twice, cfg.points());
  }
}

TEST(IncidencePreserved, WorkedPairs) {
  EXPECT_TRUE(incidence_preserved(P(0, 0), P(0, 0)));
  EXPECT_TRUE(incidence_preserved(P(-2, 0), P(0, 0)));
  EXPECT_FALSE(incidence_preserved(P(1, 2), P(0, 0)));
}

TEST(IncidencePreserved, AgreesWithBruteForceBothWays) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> c(-4, 4);
  for (int k = 0; k < 2000; ++k) {
    const Point2 p = P(c(rng), c(rng));
    const Point2 q = P(c(rng), c(rng));
    EXPECT_EQ(incidence_preserved(p, q), oracle::on_line(-q, p));
    EXPECT_EQ(oracle::on_line(-q, p), oracle::on_line(-p, q));
  }
}

TEST(StableLinesThrough, NearPencil) {
  const auto recs = stable_lines_through(config(oracle::kNearPencilPoints));
  ASSERT_EQ(recs.size(), 1U);
  EXPECT_EQ(recs[0].line.vertex(), P(0, 0));
  EXPECT_EQ(recs[0].incident, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(recs[0].kind, StableKind::VertexWitnessed);
}

TEST(StableLinesThrough, TwoPointConfigs) {
  const auto generic = stable_lines_through(config({P(0, 0), P(1, 3)}));
  ASSERT_EQ(generic.size(), 1U);
  EXPECT_EQ(generic[0].kind, StableKind::UniquelyDetermined);
  EXPECT_EQ(generic[0].line, stable_line_two_points(P(0, 0), P(1, 3)));

  const auto coaxial = stable_lines_through(config({P(-3, 2), P(-1, 2)}));
  ASSERT_EQ(coaxial.size(), 1U);
  EXPECT_EQ(coaxial[0].line.vertex(), P(-1, 2));
  EXPECT_EQ(coaxial[0].kind, StableKind::VertexWitnessed);

  try {
    (void)stable_lines_through(config({P(0, 0)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooFewPoints);
  }
}

TEST(StableLineTwoPoints, CramerInstances) {
  EXPECT_EQ(stable_line_two_points(P(-3, 2), P(-1, 2)).vertex(), P(-1, 2));
  EXPECT_EQ(stable_line_coefficients(P(-3, 2), P(-1, 2)),
            (TropTriple{TropScalar(2), TropScalar(-1), TropScalar(1)}));
  // Diagonal coaxial pair: the line must pass through (0, 0), so its vertex
  // is the lower-left point.
  const auto diag = stable_line_two_points(P(0, 0), P(2, 2));
  EXPECT_EQ(diag.vertex(), P(0, 0));
  EXPECT_TRUE(contains(diag, P(2, 2)));
  EXPECT_FALSE(contains(line_from_vertex(P(2, 2)), P(0, 0)));
  try {
    (void)stable_line_two_points(P(0, 0), P(0, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EqualPoints);
  }
}

TEST(StableLineTwoPoints, MatchesDualRecordForRandomPairs) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-8, 8);
  std::uniform_int_distribution<int> mode(0, 3);
  for (int k = 0; k < 2000; ++k) {
    const Point2 a = P(c(rng), c(rng));
    Point2 b = P(c(rng), c(rng));
    const long s = c(rng);
    switch (mode(rng)) {
      case 0: b = {a.x + s, a.y}; break;
      case 1: b = {a.x, a.y + s}; break;
      case 2: b = {a.x + s, a.y + s}; break;
      default: break;
    }
    if (a == b) continue;
    const auto recs = stable_lines_through(config({a, b}));
    ASSERT_EQ(recs.size(), 1U);
    EXPECT_EQ(recs[0].line, stable_line_two_points(a, b));
    const bool coaxial = coaxial_points(a, b).has_value();
    EXPECT_EQ(recs[0].kind == StableKind::VertexWitnessed, coaxial);
  }
}

TEST(OrdinaryStableLines, WorkedConfigs) {
  EXPECT_EQ(ordinary_stable_lines(config({P(0, 0), P(1, 3)})).size(), 1U);
  EXPECT_TRUE(ordinary_stable_lines(config(oracle::kNearPencilPoints)).empty());
}

TEST(DbeCheck, NearPencilIsSharp) {
  const auto v = dbe_check(config(oracle::kNearPencilPoints));
  EXPECT_EQ(v.v, 4U);
  EXPECT_EQ(v.b, 1U);
  EXPECT_TRUE(v.bound_holds);
  EXPECT_TRUE(v.equality);
  EXPECT_TRUE(v.near_pencil);
  EXPECT_TRUE(v.consistent);
}

TEST(DbeCheck, GenericFourPoints) {
  const auto v = dbe_check(config({P(0, 0), P(1, 3), P(3, 2), P(2, -1)}));
  EXPECT_GE(v.b, 4U);
  EXPECT_TRUE(v.bound_holds);
  EXPECT_FALSE(v.equality);
  EXPECT_TRUE(v.consistent);
}

TEST(DbeCheck, NearPencilAboveTheBound) {
  std::vector<Point2> pts;
  for (const auto& v : oracle::kSixLineNearPencil) pts.push_back(-v);
  const auto v = dbe_check(config(pts));
  EXPECT_TRUE(v.bound_holds);
  EXPECT_FALSE(v.equality);
  EXPECT_TRUE(v.near_pencil);
  EXPECT_TRUE(v.consistent);
}

TEST(DbeCheck, NeedsFourPoints) {
  try {
    (void)dbe_check(config({P(0, 0), P(1, 0), P(0, 1)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooFewPoints);
  }
}

TEST(DbeVerdict, ConsistencyRule) {
  EXPECT_FALSE(dbe_verdict(5, 2, false).consistent);
  EXPECT_TRUE(dbe_verdict(5, 2, true).consistent);
  EXPECT_TRUE(dbe_verdict(5, 3, false).consistent);
  EXPECT_FALSE(dbe_verdict(5, 1, true).bound_holds);
}

TEST(StableLineRecords, PropertiesOnRandomConfigs) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 6;
    const PointConfig cfg = random_config(rng, n, n <= 3 ? 2 : 4);
    const auto recs = stable_lines_through(cfg);
    EXPECT_EQ(recs.size(), counts(dualize_points(cfg)).b);
    std::set<Point2> vertices;
    for (const auto& r : recs) {
      EXPECT_TRUE(vertices.insert(r.line.vertex()).second);
      EXPECT_GE(r.incident.size(), 2U);
      std::vector<std::size_t> on;
      bool witnessed = false;
      for (std::size_t k = 0; k < cfg.size(); ++k) {
        if (oracle::on_line(r.line.vertex(), cfg.points()[k])) on.push_back(k);
        if (cfg.points()[k] == r.line.vertex()) witnessed = true;
      }
      EXPECT_EQ(r.incident, on);
      EXPECT_EQ(r.kind == StableKind::VertexWitnessed, witnessed);
    }
    if (n >= 4) {
      const auto v = dbe_check(cfg);
      EXPECT_TRUE(v.bound_holds);
      EXPECT_TRUE(v.consistent);
    }
  }
}
