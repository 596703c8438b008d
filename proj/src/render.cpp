#include "apollonian/render.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace apollonian {

std::string jsonl_emit(const std::vector<Circle>& circles) {
    std::string out;
    for (const Circle& c : circles) {
        nlohmann::ordered_json j;
        j["b"] = c.b;
        j["bp"] = c.bp;
        j["zre"] = c.z.re;
        j["zim"] = c.z.im;
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::vector<Circle> jsonl_parse(const std::string& text) {
    std::vector<Circle> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        Circle c{j.at("b").get<long long>(), j.at("bp").get<long long>(),
                 GaussianInt{j.at("zre").get<long long>(), j.at("zim").get<long long>()}};
        if (!circle_invariants_hold(c))
            throw std::domain_error("jsonl_parse: record violates circle invariants");
        out.push_back(c);
    }
    return out;
}

namespace {

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    // normalize "-0.000000"
    if (std::string(buf) == "-0.000000") return "0.000000";
    return buf;
}

}  // namespace

std::string emit_svg(const std::vector<Circle>& circles, const RenderSpec& spec) {
    if (!spec.window.valid() || !(Rational(0) < spec.scale))
        throw std::domain_error("emit_svg: invalid render spec");
    const RationalRect& w = spec.window;
    double s = spec.scale.to_double();
    double width = (w.x1 - w.x0).to_double() * s;
    double height = (w.y1 - w.y0).to_double() * s;
    // Plane coordinates to pixels, y flipped so the plane's y grows upward.
    auto px = [&](Rational x) { return fixed6((x - w.x0).to_double() * s); };
    auto py = [&](Rational y) { return fixed6((w.y1 - y).to_double() * s); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed6(width)
        << "\" height=\"" << fixed6(height) << "\" viewBox=\"0 0 " << fixed6(width) << " "
        << fixed6(height) << "\">\n";
    std::string stroke_px = fixed6(spec.stroke.to_double());

    for (const Circle& c : circles) {
        EuclideanShape sh = euclidean_shape(c);
        const char* colour = c.b < 0 ? "#b03030" : "#000000";
        if (sh.is_line) {
            // Axis-parallel: normal is a unit.
            Rational off = sh.offset;
            std::string x1, y1, x2, y2;
            if (sh.normal.im == 0) {  // vertical line re = +-off
                Rational x = sh.normal.re > 0 ? off : -off;
                x1 = x2 = px(x);
                y1 = py(w.y0);
                y2 = py(w.y1);
            } else {  // horizontal line im = +-off
                Rational y = sh.normal.im > 0 ? off : -off;
                y1 = y2 = py(y);
                x1 = px(w.x0);
                x2 = px(w.x1);
            }
            svg << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\""
                << y2 << "\" stroke=\"" << colour << "\" stroke-width=\"" << stroke_px
                << "\"/>\n";
        } else {
            svg << "  <circle cx=\"" << px(sh.cx) << "\" cy=\"" << py(sh.cy) << "\" r=\""
                << fixed6(sh.radius.to_double() * s) << "\" fill=\"none\" stroke=\"" << colour
                << "\" stroke-width=\"" << stroke_px << "\"/>\n";
        }
        if (spec.labels != LabelMode::None && c.b != 0) {
            long long value = spec.labels == LabelMode::Curvature ? c.b : c.b / 2;
            double font = 0.8 * sh.radius.to_double() * s;
            svg << "  <text x=\"" << px(sh.cx) << "\" y=\"" << py(sh.cy)
                << "\" font-size=\"" << fixed6(font)
                << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << value
                << "</text>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace apollonian
