#include "troplines/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace troplines {

namespace {

constexpr double kPanel = 400.0;
constexpr double kMargin = 20.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

const char* cell_fill(CellClass cls) {
  switch (cls) {
    case CellClass::Triangle: return "#ffffff";
    case CellClass::Parallelogram: return "#cfe3f5";
    case CellClass::Hexagon: return "#a9cbe8";
    case CellClass::NonUniform4: return "#f7d9b0";
    case CellClass::NonUniform5: return "#f2bf7e";
    case CellClass::NonUniform6: return "#eba24f";
  }
  return "#ffffff";
}

// Maps a rectangle of world coordinates into a square panel, y up.
struct Viewport {
  Rational x0, y0, x1, y1;
  double offset;

  [[nodiscard]] double scale() const {
    const double span = std::max((x1 - x0).to_double(), (y1 - y0).to_double());
    return (kPanel - 2 * kMargin) / span;
  }
  [[nodiscard]] double px(const Rational& v) const {
    return offset + kMargin + (v - x0).to_double() * scale();
  }
  [[nodiscard]] double py(const Rational& v) const {
    return kPanel - kMargin - (v - y0).to_double() * scale();
  }
  [[nodiscard]] std::string x(const Rational& v) const { return fmt(px(v)); }
  [[nodiscard]] std::string y(const Rational& v) const { return fmt(py(v)); }
};

}  // namespace

std::string render_svg(const Arrangement& arr, const ArrangementAnalysis& analysis,
                       const DualSubdivision& sub) {
  std::vector<Point2> anchors;
  for (const auto& line : arr.lines()) anchors.push_back(line.vertex());
  for (const auto& rec : analysis.vertices) anchors.push_back(rec.data.point);
  Rational x0 = anchors.front().x, x1 = x0, y0 = anchors.front().y, y1 = y0;
  for (const auto& p : anchors) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  x0 = x0 - 2;
  y0 = y0 - 2;
  x1 = x1 + 2;
  y1 = y1 + 2;
  const Viewport left{x0, y0, x1, y1, 0.0};
  const Viewport right{Rational(0), Rational(0), Rational(sub.n), Rational(sub.n), kPanel};

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(2 * kPanel)
      << "\" height=\"" << fmt(kPanel) << "\" viewBox=\"0 0 " << fmt(2 * kPanel) << ' '
      << fmt(kPanel) << "\">\n";

  out << "<g id=\"arrangement\" fill=\"none\" stroke=\"#1f3b73\" stroke-width=\"1.5\">\n";
  out << "<rect x=\"" << left.x(x0) << "\" y=\"" << left.y(y1) << "\" width=\""
      << fmt((x1 - x0).to_double() * left.scale()) << "\" height=\""
      << fmt((y1 - y0).to_double() * left.scale()) << "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const Point2 v = arr[k].vertex();
    const Rational reach = std::min(x1 - v.x, y1 - v.y);
    const Point2 ne{v.x + reach, v.y + reach};
    out << "<path class=\"line\" data-index=\"" << k << "\" d=\"M" << left.x(x0) << ' '
        << left.y(v.y) << " L" << left.x(v.x) << ' ' << left.y(v.y) << " L" << left.x(ne.x)
        << ' ' << left.y(ne.y) << " M" << left.x(v.x) << ' ' << left.y(v.y) << " L"
        << left.x(v.x) << ' ' << left.y(y0) << "\"/>\n";
  }
  std::map<Point2, bool> stable;  // point -> some pair crosses transversally there
  for (std::size_t a = 0; a < arr.size(); ++a) {
    for (std::size_t b = a + 1; b < arr.size(); ++b) {
      const auto r = pairwise_stable_intersection(arr[a], arr[b]);
      stable[r.point] = stable[r.point] || r.kind == IntersectionKind::FirstKind;
    }
  }
  for (const auto& [p, first] : stable) {
    if (first) {
      out << "<circle class=\"stable first_kind\" cx=\"" << left.x(p.x) << "\" cy=\""
          << left.y(p.y) << "\" r=\"5\" fill=\"#c0392b\" stroke=\"none\"/>\n";
    } else {
      out << "<rect class=\"stable second_kind\" x=\"" << fmt(left.px(p.x) - 5)
          << "\" y=\"" << fmt(left.py(p.y) - 5)
          << "\" width=\"10\" height=\"10\" fill=\"#27ae60\" stroke=\"none\"/>\n";
    }
  }
  out << "</g>\n";

  out << "<g id=\"subdivision\" stroke=\"#333333\" stroke-width=\"1\">\n";
  for (const auto& cell : sub.cells) {
    out << "<polygon class=\"cell " << to_string(cell.cls) << "\" fill=\"" << cell_fill(cell.cls)
        << "\" points=\"";
    for (std::size_t k = 0; k < cell.vertices.size(); ++k) {
      if (k) out << ' ';
      out << right.x(Rational(cell.vertices[k].i)) << ',' << right.y(Rational(cell.vertices[k].j));
    }
    out << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace troplines
