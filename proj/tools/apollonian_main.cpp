#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "apollonian/explore.hpp"
#include "apollonian/render.hpp"
#include "apollonian/verify.hpp"

namespace {

using namespace apollonian;

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

// "re+imi" with both parts optional: "3", "-2i", "1+2i", "i", "-i".
GaussianInt parse_gaussian(const std::string& s) {
    if (s.empty()) throw CLI::ValidationError("empty Gaussian integer");
    std::string t = s;
    long long re = 0, im = 0;
    if (t.back() == 'i') {
        t.pop_back();
        size_t split = t.find_last_of("+-");
        if (split == std::string::npos || split == 0) {
            std::string imtxt = t;
            im = (imtxt.empty() || imtxt == "+") ? 1 : (imtxt == "-") ? -1 : std::stoll(imtxt);
        } else {
            re = std::stoll(t.substr(0, split));
            std::string imtxt = t.substr(split);
            im = (imtxt == "+") ? 1 : (imtxt == "-") ? -1 : std::stoll(imtxt);
        }
    } else {
        re = std::stoll(t);
    }
    return {re, im};
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

RationalRect parse_window(const std::string& s) {
    auto parts = split_commas(s);
    if (parts.size() != 4) throw CLI::ValidationError("--window needs x0,y0,x1,y1");
    RationalRect w{parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]),
                   parse_rational(parts[3])};
    if (!w.valid()) throw CLI::ValidationError("--window is empty");
    return w;
}

GaussMatrix2 parse_matrix(const std::string& s) {
    auto parts = split_commas(s);
    if (parts.size() != 4) throw CLI::ValidationError("--coset-matrix needs a,b,c,d");
    GaussMatrix2 m = GaussMatrix2::from_rows(parse_gaussian(parts[0]), parse_gaussian(parts[1]),
                                             parse_gaussian(parts[2]), parse_gaussian(parts[3]));
    if (!has_unit_det(m)) throw CLI::ValidationError("--coset-matrix determinant is not a unit");
    return m;
}

struct OutputFlags {
    std::string out_path, svg_path;
    std::string labels = "none";
    std::string scale = "128";
    std::string stroke = "1";
};

void add_output_flags(CLI::App* cmd, OutputFlags& f) {
    cmd->add_option("--out", f.out_path, "write circles as JSON-Lines to this path");
    cmd->add_option("--svg", f.svg_path, "write an SVG rendering to this path");
    cmd->add_option("--labels", f.labels, "none|curvature|half")
        ->check(CLI::IsMember({"none", "curvature", "half"}));
    cmd->add_option("--scale", f.scale, "pixels per unit (rational)");
    cmd->add_option("--stroke-width", f.stroke, "stroke width in pixels (rational)");
    cmd->set_config("--config", "", "key=value configuration file");
}

int emit_outputs(const std::vector<Circle>& circles, const RationalRect& window,
                 const OutputFlags& f) {
    std::string jsonl = jsonl_emit(circles);
    if (f.out_path.empty()) {
        std::cout << jsonl;
    } else {
        std::ofstream out(f.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open " << f.out_path << "\n";
            return 1;
        }
        out << jsonl;
    }
    if (!f.svg_path.empty()) {
        RenderSpec spec;
        spec.window = window;
        spec.scale = parse_rational(f.scale);
        spec.stroke = parse_rational(f.stroke);
        spec.labels = f.labels == "curvature" ? LabelMode::Curvature
                      : f.labels == "half"    ? LabelMode::HalfCurvature
                                              : LabelMode::None;
        std::ofstream out(f.svg_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open " << f.svg_path << "\n";
            return 1;
        }
        out << emit_svg(circles, spec);
    }
    return 0;
}

std::vector<Circle> graph_circles(const PalaceGraph& g) {
    std::vector<Circle> circles;
    for (const auto& [k, c] : g.vertices) circles.push_back(c);
    return circles;
}

void print_suite(const SuiteResult& r) {
    std::cout << r.name << ": " << r.passed << " passed, " << r.failed << " failed\n";
    for (const std::string& f : r.failures) std::cout << "  failure: " << f << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Apollonian circle packings over the Gaussian integers"};
    app.require_subcommand(1);

    std::string window_text = "-2,-1,3,2";
    long long max_curvature = 20;
    int max_depth = 0;
    long long margin = 4;

    auto add_explore_flags = [&](CLI::App* cmd) {
        cmd->add_option("--max-curvature", max_curvature, "curvature bound");
        cmd->add_option("--max-depth", max_depth, "generation depth bound (0 = none)");
        cmd->add_option("--window", window_text, "window as x0,y0,x1,y1 (rationals as p/q)");
        cmd->add_option("--margin", margin, "pruning margin");
    };

    OutputFlags out_strip, out_coset, out_palace, out_super;

    CLI::App* strip = app.add_subcommand("strip", "the strip packing, generated as a group orbit");
    add_explore_flags(strip);
    add_output_flags(strip, out_strip);

    CLI::App* coset = app.add_subcommand("coset", "a coset packing, generated as a group orbit");
    std::string coset_text = "i,0,1,i";
    coset->add_option("--coset-matrix", coset_text, "matrix a,b,c,d with Gaussian entries re+imi");
    add_explore_flags(coset);
    add_output_flags(coset, out_coset);

    CLI::App* palace = app.add_subcommand("palace", "a packing generated by Descartes swaps");
    std::string seed_name = "base";
    palace->add_option("--seed", seed_name, "seed quadruple (base)")
        ->check(CLI::IsMember({"base"}));
    add_explore_flags(palace);
    add_output_flags(palace, out_palace);

    CLI::App* super = app.add_subcommand("superpacking", "all Gaussian circles in a window");
    std::string center_text;
    super->add_option("--center", center_text, "recentre the window at x,y");
    add_explore_flags(super);
    add_output_flags(super, out_super);

    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite;
    int samples = 1000, depth = 4, forms = 20;
    std::uint64_t seed_rng = 1;
    std::string from = "both";
    verify->add_option("suite", suite, "hermitian|descartes|spinor|parity|lockstep|primitivity|relate")
        ->required();
    verify->add_option("--samples", samples, "number of random samples");
    verify->add_option("--forms", forms, "forms per superbasis (hermitian)");
    verify->add_option("--depth", depth, "lockstep depth");
    verify->add_option("--seed-rng,--seed", seed_rng, "RNG seed");
    verify->add_option("--max-curvature", max_curvature, "curvature bound");
    verify->add_option("--from", from, "strip|coset|both (descartes)")
        ->check(CLI::IsMember({"strip", "coset", "both"}));

    CLI11_PARSE(app, argc, argv);

    try {
        ExplorationConfig cfg;
        cfg.max_curvature = max_curvature;
        cfg.max_depth = max_depth;
        cfg.window = parse_window(window_text);
        cfg.margin = margin;

        if (strip->parsed()) {
            PalaceGraph g = strip_packing(cfg);
            return emit_outputs(graph_circles(g), cfg.window, out_strip);
        }
        if (coset->parsed()) {
            PalaceGraph g = coset_packing(parse_matrix(coset_text), cfg);
            return emit_outputs(graph_circles(g), cfg.window, out_coset);
        }
        if (palace->parsed()) {
            PalaceGraph g = explore_palace(base_quadruple(), cfg);
            return emit_outputs(graph_circles(g), cfg.window, out_palace);
        }
        if (super->parsed()) {
            if (super->count("--max-curvature") == 0) cfg.max_curvature = 40;
            if (super->count("--window") == 0)
                cfg.window = RationalRect{Rational(0), Rational(0), Rational(1), Rational(1)};
            if (!center_text.empty()) {
                auto parts = split_commas(center_text);
                if (parts.size() != 2) throw CLI::ValidationError("--center needs x,y");
                Rational cx = parse_rational(parts[0]), cy = parse_rational(parts[1]);
                Rational hw = (cfg.window.x1 - cfg.window.x0) / Rational(2);
                Rational hh = (cfg.window.y1 - cfg.window.y0) / Rational(2);
                cfg.window = RationalRect{cx - hw, cy - hh, cx + hw, cy + hh};
            }
            return emit_outputs(enumerate_superpacking(cfg), cfg.window, out_super);
        }
        if (verify->parsed()) {
            SuiteResult r;
            if (suite == "hermitian") {
                r = verify_hermitian(samples, forms, seed_rng);
            } else if (suite == "descartes") {
                PackingChoice choice = from == "strip"   ? PackingChoice::Strip
                                       : from == "coset" ? PackingChoice::Coset
                                                         : PackingChoice::Both;
                r = verify_descartes(verify->count("--max-curvature") ? max_curvature : 50,
                                     choice);
            } else if (suite == "spinor") {
                r = verify_spinor(samples, seed_rng);
            } else if (suite == "parity") {
                r = verify_parity(samples, seed_rng);
            } else if (suite == "lockstep") {
                r = verify_lockstep(depth);
            } else if (suite == "primitivity") {
                r = verify_primitivity(verify->count("--max-curvature") ? max_curvature : 40);
            } else if (suite == "relate") {
                r = verify_relate(samples < 200 ? samples : 200, seed_rng);
            } else {
                std::cerr << "unknown suite: " << suite << "\n";
                return 2;
            }
            print_suite(r);
            std::cout << (r.ok() ? "PASS" : "FAIL") << "\n";
            return r.ok() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
