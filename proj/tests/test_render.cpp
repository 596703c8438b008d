#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "apollonian/explore.hpp"
#include "apollonian/render.hpp"

using namespace apollonian;

namespace {

GaussianInt gi(long long re, long long im) { return {re, im}; }

std::vector<Circle> base_circles() {
    std::vector<Circle> out;
    for (const PedoeVector& v : base_quadruple().cols) out.push_back(circle_from_pedoe(v));
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("jsonl round-trips bit-exactly") {
    std::vector<Circle> circles = base_circles();
    circles.push_back(Circle{-4, -2, gi(0, -3)});
    std::string text = jsonl_emit(circles);
    CHECK(jsonl_parse(text) == circles);
    CHECK(jsonl_emit(jsonl_parse(text)) == text);

    ExplorationConfig cfg;
    cfg.max_curvature = 10;
    PalaceGraph g = explore_palace(base_quadruple(), cfg);
    std::vector<Circle> many;
    for (const auto& [k, c] : g.vertices) many.push_back(c);
    CHECK(jsonl_parse(jsonl_emit(many)) == many);
}

TEST_CASE("jsonl rejects corrupt records") {
    CHECK_THROWS(jsonl_parse("{\"b\": 1, \"bp\": 0, \"zre\": 0, \"zim\": 1}\n"));
}

TEST_CASE("empty svg is still a document") {
    RenderSpec spec;
    std::string svg = emit_svg({}, spec);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("base quadruple renders two lines and two circles") {
    RenderSpec spec;
    spec.window = RationalRect{Rational(-1), Rational(-1), Rational(2), Rational(2)};
    std::string svg = emit_svg(base_circles(), spec);
    size_t lines = 0, circles = 0, pos = 0;
    while ((pos = svg.find("<line", pos)) != std::string::npos) { ++lines; pos += 5; }
    pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) { ++circles; pos += 7; }
    CHECK(lines == 2);
    CHECK(circles == 2);
}

TEST_CASE("negative curvature uses a distinct stroke") {
    RenderSpec spec;
    std::string svg = emit_svg({Circle{-4, -2, gi(0, -3)}}, spec);
    CHECK(svg.find("#b03030") != std::string::npos);
}

TEST_CASE("svg output is deterministic and matches the golden file") {
    RenderSpec spec;
    spec.window = RationalRect{Rational(-1), Rational(-1), Rational(2), Rational(2)};
    spec.scale = Rational(100);
    spec.labels = LabelMode::Curvature;
    std::string svg = emit_svg(base_circles(), spec);
    CHECK(svg == emit_svg(base_circles(), spec));

    std::string golden = read_file(std::string(APOLLONIAN_GOLDEN_DIR) + "/base_quadruple.svg");
    CHECK(svg == golden);
}

TEST_CASE("labels can show half-curvature") {
    RenderSpec spec;
    spec.window = RationalRect{Rational(-1), Rational(-1), Rational(2), Rational(2)};
    spec.labels = LabelMode::HalfCurvature;
    std::string svg = emit_svg({Circle{2, 0, gi(0, 1)}}, spec);
    CHECK(svg.find(">1</text>") != std::string::npos);
}
