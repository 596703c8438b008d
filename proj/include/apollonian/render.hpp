#pragma once

#include <string>
#include <vector>

#include "apollonian/circle.hpp"
#include "apollonian/rational.hpp"

namespace apollonian {

enum class LabelMode { None, Curvature, HalfCurvature };

// Everything stays rational until the SVG writer, which rounds to six
// decimal places.
struct RenderSpec {
    RationalRect window{Rational(-2), Rational(-1), Rational(3), Rational(2)};
    Rational scale{128};        // pixels per unit
    Rational stroke{1};         // stroke width in pixels
    LabelMode labels = LabelMode::None;
};

// One JSON object per line: {"b": int, "bp": int, "zre": int, "zim": int}.
std::string jsonl_emit(const std::vector<Circle>& circles);
std::vector<Circle> jsonl_parse(const std::string& text);

// Deterministic SVG: circles in input order, lines clipped to the window,
// negative-curvature circles with a distinct stroke.
std::string emit_svg(const std::vector<Circle>& circles, const RenderSpec& spec);

}  // namespace apollonian
