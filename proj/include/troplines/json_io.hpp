#pragma once

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

#include "troplines/arrangement.hpp"
#include "troplines/incidence.hpp"
#include "troplines/subdivision.hpp"
#include "troplines/sweep.hpp"

namespace troplines::io {

using nlohmann::json;

/// Rationals are written as strings ("3", "-7/2"); integers or strings are
/// accepted on input. `field` names the location for error messages.
json to_json(const Rational& r);
Rational rational_from_json(const json& j, const std::string& field);

json to_json(const Point2& p);
Point2 point_from_json(const json& j, const std::string& field);

json to_json(const TropicalLine& line);
json to_json(const DbeVerdict& v);
json to_json(const StableLineRecord& r);
json to_json(const Counts& c);

/// {"n", "cells": [{vertices, class, dual_point, boundary_edges}], "lift"}.
json subdivision_to_json(const DualSubdivision& sub);

/// One JSONL record of a sweep.
json to_json(const ConfigResult& r);
/// Sweep summary; `include_elapsed` false gives a reproducible document.
json summary_to_json(const SweepParams& params, const SweepReport& report, bool include_elapsed);

/// Input file: either {"lines": [{"vertex": [r, r]}, ...]} or
/// {"points": [[r, r], ...]}. Throws Error(Parse) naming the bad field and
/// propagates DuplicateLine / Empty from validation.
using Input = std::variant<Arrangement, PointConfig>;
Input parse_input(const json& doc);

}  // namespace troplines::io
