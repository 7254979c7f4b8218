#include <gtest/gtest.h>

#include "oracle.hpp"
#include "troplines/svg.hpp"

using namespace troplines;
using oracle::P;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++count;
  }
  return count;
}

std::string render(const Arrangement& arr) {
  const auto an = analyze(arr);
  return render_svg(arr, an, dual_subdivision(arr, an));
}

}  // namespace

TEST(RenderSvg, NearPencilDualArrangement) {
  const std::string svg = render(oracle::arrangement({P(0, 0), P(0, 2), P(2, 0), P(-2, -2)}));
  EXPECT_EQ(svg.rfind("<?xml", 0), 0U);
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
  EXPECT_EQ(occurrences(svg, "class=\"line\""), 4U);
  EXPECT_EQ(occurrences(svg, "class=\"stable "), 1U);
  EXPECT_EQ(occurrences(svg, "class=\"cell "), 4U);
  EXPECT_EQ(occurrences(svg, "class=\"cell triangle\""), 3U);
  EXPECT_EQ(occurrences(svg, "class=\"cell nonuniform6\""), 1U);
}

TEST(RenderSvg, SingleLine) {
  const std::string svg = render(oracle::arrangement({P(0, 0)}));
  EXPECT_EQ(occurrences(svg, "class=\"line\""), 1U);
  EXPECT_EQ(occurrences(svg, "class=\"stable "), 0U);
  EXPECT_EQ(occurrences(svg, "class=\"cell triangle\""), 1U);
}

TEST(RenderSvg, MarksKindsDistinctly) {
  const std::string coaxial = render(oracle::arrangement({P(0, 0), P(-2, 0)}));
  EXPECT_EQ(occurrences(coaxial, "stable second_kind"), 1U);
  const std::string transversal = render(oracle::arrangement({P(0, 0), P(2, 1)}));
  EXPECT_EQ(occurrences(transversal, "stable first_kind"), 1U);
}

TEST(RenderSvg, Deterministic) {
  const auto arr = oracle::arrangement({P(0, 0), P(3, 1), P(-1, 4), P(2, 2)});
  EXPECT_EQ(render(arr), render(arr));
}
