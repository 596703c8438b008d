#pragma once

#include <map>
#include <string>
#include <vector>

#include "apollonian/circle.hpp"
#include "apollonian/lax.hpp"
#include "apollonian/minkowski.hpp"
#include "apollonian/rational.hpp"

namespace apollonian {

// The base quadruple: real line, the line Im z = 1 oriented leftward, and
// the two curvature-2 circles tangent to both at 0 and 1.  Column order as
// in the reference matrix ((0,0,0,-1), (0,2,0,1), (2,2,2,1), (2,0,0,1)).
Quadruple base_quadruple();

// The left standard chamber on u = (1,0), v = (0,-i), w = (-1,i); its
// vertex circles form the base quadruple.
Chamber base_chamber();

// Generators of the strip group: D = (1 0; 1 1) and B = (0 i; i 1).
GaussMatrix2 gamma_gen_d();
GaussMatrix2 gamma_gen_b();

// A = B^-1 D B D^-1 B^-1 D B up to a unit, with A the chamber swap
// (0 -1; 1 0).
bool gamma_relation_holds();

// The coset matrix (i 0; 1 i) producing the bounded example packing.
GaussMatrix2 example_coset_matrix();

// (1 1; 0 1), (1 i; 0 1), (0 -1; 1 0), (i 0; 0 1): generate PGL_2(Z[i]).
std::array<GaussMatrix2, 4> pgl2_generators();

struct ExplorationConfig {
    long long max_curvature = 20;
    int max_depth = 0;  // 0 = unlimited
    RationalRect window{Rational(-2), Rational(-1), Rational(3), Rational(2)};
    long long margin = 4;
};

// Palace of one packing restricted to a window: circles keyed by Pedoe
// vector, tangent pairs as labelled edges, Descartes quadruples as
// chambers.  Chambers carry the ordering sign of their lexicographically
// sorted columns.
struct PalaceGraph {
    struct LabelledEdge {
        PedoeVector a, b;  // a < b
        LaxVector label;
        auto operator<=>(const LabelledEdge&) const = default;
    };
    struct ChamberKeys {
        std::array<PedoeVector, 4> keys;  // sorted
        int sign = 1;
        auto operator<=>(const ChamberKeys&) const = default;
    };

    std::map<PedoeVector, Circle> vertices;
    std::vector<LabelledEdge> edges;
    std::vector<ChamberKeys> chambers;

    // Descartes quadruples encountered while generating, including those
    // whose circles fall outside the window filter.
    std::vector<Quadruple> generated_quadruples;
};

bool graphs_agree(const PalaceGraph& a, const PalaceGraph& b, std::string* why = nullptr);

// Closure of the seed under the four swaps, pruned by curvature and
// window; vertices filtered to |b| <= max_curvature with the disk meeting
// the window.
PalaceGraph explore_palace(const Quadruple& seed, const ExplorationConfig& cfg);

// Orbit of the real line under words in the strip group (left-multiplied
// by the coset matrix), generated through the spinor map, with the same
// filtering as explore_palace.
PalaceGraph strip_packing(const ExplorationConfig& cfg);
PalaceGraph coset_packing(const GaussMatrix2& n, const ExplorationConfig& cfg);

// Breadth-first closure of a chamber under wall crossings.
struct KingdomExploration {
    std::vector<Chamber> chambers;    // in BFS order
    std::vector<int> layer_offsets;   // chambers[layer_offsets[d], layer_offsets[d+1]) at depth d
};

KingdomExploration explore_kingdom(const Chamber& seed, int max_depth);

// Runs the algebraic (wall-crossing) and geometric (swap) explorations
// from the base pair in lockstep and cross-checks every chamber: circles
// match, edge labels are tangency lax vectors, vertex lattices contain
// their edge labels, walls are superbases, and lattices collide exactly
// when circles do.
struct LockstepReport {
    int depth = 0;
    int chamber_count = 0;
    int circle_count = 0;
    int edge_checks = 0;
    std::vector<int> layer_sizes;
    std::vector<std::string> mismatches;

    bool ok() const { return mismatches.empty(); }
};

LockstepReport lockstep_verify(int depth);

// All distinct Gaussian circles with 0 < b < max_curvature whose curve
// meets the window, generated by closing the base quadruple under swaps
// and the PGL_2(Z[i]) generators, sorted by Pedoe key.
std::vector<Circle> enumerate_superpacking(const ExplorationConfig& cfg);

struct HalfPrimitivityReport {
    bool curvatures_even = true;
    bool centres_integral = true;  // structural for Circle, reported for completeness
    long long half_curvature_gcd = 0;
    bool ok() const { return curvatures_even && centres_integral && half_curvature_gcd == 1; }
};

HalfPrimitivityReport half_primitive_check(const std::vector<Circle>& circles);

}  // namespace apollonian
