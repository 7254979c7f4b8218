#pragma once

#include <string>

#include "troplines/arrangement.hpp"
#include "troplines/subdivision.hpp"

namespace troplines {

/// SVG 1.1 document with the arrangement on the left and its dual subdivision
/// on the right.
///
/// Rays are clipped to the box 2 units beyond every line vertex and
/// arrangement vertex. Each stable intersection point is marked with a circle
/// (class "stable first_kind") when some pair of lines crosses transversally
/// there, otherwise with a square (class "stable second_kind"). Output is a
/// pure function of the input.
std::string render_svg(const Arrangement& arr, const ArrangementAnalysis& analysis,
                       const DualSubdivision& sub);

}  // namespace troplines
