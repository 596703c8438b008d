#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apollonian/gaussian.hpp"

namespace apollonian {

// Primitive vector of Z[i]^2 up to multiplication by {1, i, -1, -i}, held
// by the representative whose first nonzero coordinate is a canonical
// associate.  Identified with a point of P^1(Q(i)).
struct LaxVector {
    GaussVec2 v;

    friend constexpr bool operator==(const LaxVector&, const LaxVector&) = default;
    constexpr auto operator<=>(const LaxVector&) const = default;

    constexpr ProjectivePoint as_projective() const { return ProjectivePoint{v}; }
};

LaxVector lax_canonical(GaussVec2 v);
inline LaxVector lax_from_projective(ProjectivePoint p) { return LaxVector{p.v}; }

bool is_primitive(GaussVec2 v);

// det of the chosen representatives; unit-ness does not depend on the choice.
bool is_basis(const LaxVector& a, const LaxVector& b);

// Triple of lax vectors, pairwise bases, with representatives summing to
// zero.  Construction normalizes so the first vector is the canonical
// representative of its class; the remaining unit assignment is then unique.
struct Superbasis {
    GaussVec2 u, v, w;
};

bool is_superbasis(const LaxVector& a, const LaxVector& b, const LaxVector& c);
Superbasis superbasis_zero_sum(const LaxVector& a, const LaxVector& b, const LaxVector& c);

// Oriented rank-2 Z-submodule of Z[i]^2 given by an ordered Z[i]-basis of
// unit determinant; the class {L, iL} with orientation.  Two values are the
// same lax lattice iff the basis matrices differ by a unit scalar and an
// SL_2(Z) change of basis.
struct LaxLattice {
    GaussVec2 u, v;

    static LaxLattice from_basis(GaussVec2 u, GaussVec2 v);
    constexpr GaussMatrix2 basis_matrix() const { return {u, v}; }
};

bool lattice_equal(const LaxLattice& a, const LaxLattice& b);
bool contains_lax(const LaxLattice& lattice, const LaxVector& x);

enum class Handedness { Left, Right };

// Ultrabasis chamber: a tetrahedron whose four faces are superbasis walls.
// vertices[0..2] lie on the wall used to build the chamber, vertices[3] is
// the apex.  Edges carry the lax vector labels; edge (i, j) joins vertex i
// to vertex j.
struct Chamber {
    struct Edge {
        int a, b;
        LaxVector label;
    };

    std::array<LaxLattice, 4> vertices;
    std::array<Edge, 6> edges;
    Handedness handedness;

    // Labels of the face opposite vertex k (a superbasis wall).
    std::array<LaxVector, 3> wall_opposite(int k) const;

    const LaxVector& edge_between(int i, int j) const;
};

// The two chambers sharing the wall {u, v, w}: wall vertex lattices
// (u, iv), (v, iw), (w, iu); left apex (w-iv, iu-v), right apex
// (w+iv, iu+v).  Non-wall edges are u+iv, v+iw, w+iu on the left and
// u-iv, v-iw, w-iu on the right.
std::pair<Chamber, Chamber> complete_wall(const Superbasis& s);

// Desk-scale verification that the court of a prince is a copy of Conway's
// palace: enumerates the topograph of Z-lax vectors of the lattice out to
// the given depth and checks bases, tree structure, and the parallelogram
// law for quadratic forms.
struct CourtReport {
    int title_count = 0;
    int superbasis_count = 0;
    // Title coordinates with respect to the prince's basis, one per sign class.
    std::vector<std::pair<long long, long long>> titles;
    bool joined_iff_basis = true;
    bool dual_tree_valence3 = true;
    bool parallelogram_law = true;
    std::vector<std::string> failures;

    bool ok() const { return joined_iff_basis && dual_tree_valence3 && parallelogram_law; }
};

// Integer symmetric 2x2 form f(x, y) = a x^2 + 2 b x y + c y^2.
struct QuadraticForm {
    long long a = 1, b = 0, c = 1;
    constexpr long long eval(long long x, long long y) const {
        return a * x * x + 2 * b * x * y + c * y * y;
    }
};

CourtReport court_check(const LaxLattice& lattice, int radius,
                        const std::vector<QuadraticForm>& forms = {});

}  // namespace apollonian
