#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "apollonian/circle.hpp"
#include "apollonian/explore.hpp"
#include "apollonian/lax.hpp"
#include "apollonian/minkowski.hpp"

using namespace apollonian;

namespace {

GaussianInt gi(long long re, long long im) { return {re, im}; }
GaussVec2 vec(long long xr, long long xi, long long yr, long long yi) {
    return {gi(xr, xi), gi(yr, yi)};
}

std::array<PedoeVector, 4> circle_keys(const Chamber& ch) {
    std::array<PedoeVector, 4> k;
    for (int i = 0; i < 4; ++i) k[i] = pedoe(circle_from_lattice(ch.vertices[i]));
    std::sort(k.begin(), k.end());
    return k;
}

}  // namespace

TEST_CASE("lax_canonical") {
    CHECK(lax_canonical(vec(0, 0, 0, -1)).v == vec(0, 0, 1, 0));
    CHECK(lax_canonical(vec(-1, 0, 0, 1)).v == vec(1, 0, 0, -1));
    CHECK(lax_canonical(vec(3, 2, 3, -2)).v == vec(3, 2, 3, -2));
    CHECK_THROWS_AS(lax_canonical(vec(2, 0, 0, 0)), std::domain_error);
    CHECK_THROWS_AS(lax_canonical(vec(1, 1, 1, -1)), std::domain_error);  // gcd 1+i
}

TEST_CASE("is_basis") {
    CHECK(is_basis(lax_canonical(vec(1, 0, 0, 0)), lax_canonical(vec(0, 0, 1, 0))));
    // (1, 0) and (1, 2): determinant 2 is not a unit
    CHECK_FALSE(is_basis(lax_canonical(vec(1, 0, 0, 0)), lax_canonical(vec(1, 0, 2, 0))));
    CHECK(is_basis(lax_canonical(vec(3, 2, 3, -2)), lax_canonical(vec(5, 2, 4, -4))));
}

TEST_CASE("is_superbasis and zero-sum normalization") {
    LaxVector e1 = lax_canonical(vec(1, 0, 0, 0));
    LaxVector e2 = lax_canonical(vec(0, 0, 1, 0));
    LaxVector s11 = lax_canonical(vec(1, 0, 1, 0));
    CHECK(is_superbasis(e1, e2, s11));
    CHECK_FALSE(is_superbasis(e1, e2, lax_canonical(vec(1, 0, 2, 0))));
    // repeated lax vector is never a superbasis
    CHECK_FALSE(is_superbasis(e1, e1, e2));

    Superbasis s = superbasis_zero_sum(e1, e2, s11);
    CHECK((s.u + s.v + s.w).is_zero());
    CHECK(s.u == e1.v);

    CHECK_THROWS_AS(superbasis_zero_sum(e1, e2, lax_canonical(vec(1, 0, 2, 0))),
                    std::domain_error);
}

TEST_CASE("the strip tangency triple is a superbasis") {
    LaxVector a = lax_canonical(vec(3, 2, 3, -2));
    LaxVector b = lax_canonical(vec(5, 2, 4, -4));
    LaxVector c = lax_canonical(vec(3, 5, 6, -1));
    CHECK(is_superbasis(a, b, c));
    // i a + b - c = 0
    CHECK((times_i(a.v) + b.v - c.v).is_zero());
    Superbasis s = superbasis_zero_sum(a, b, c);
    CHECK((s.u + s.v + s.w).is_zero());
}

TEST_CASE("complete_wall reproduces the base chamber") {
    LaxVector u = lax_canonical(vec(1, 0, 0, 0));
    LaxVector v = lax_canonical(vec(0, 0, 0, -1));
    LaxVector w = lax_canonical(vec(-1, 0, 0, 1));
    Superbasis s = superbasis_zero_sum(u, v, w);
    CHECK(s.u == vec(1, 0, 0, 0));
    CHECK(s.v == vec(0, 0, 0, -1));
    CHECK(s.w == vec(-1, 0, 0, 1));

    auto [left, right] = complete_wall(s);
    CHECK(left.handedness == Handedness::Left);
    CHECK(right.handedness == Handedness::Right);

    // Vertex lattices of the left chamber, as four reference basis matrices.
    CHECK(left.vertices[0].basis_matrix() == GaussMatrix2{vec(1, 0, 0, 0), vec(0, 0, 1, 0)});
    CHECK(lattice_equal(left.vertices[2],
                        LaxLattice::from_basis(vec(-1, 0, 0, 1), vec(0, 1, 0, 0))));
    CHECK(lattice_equal(left.vertices[1],
                        LaxLattice::from_basis(vec(0, 0, 0, -1), vec(0, -1, -1, 0))));
    // left apex basis (w - iv, iu - v) = ((-1, i-1), (i, i))
    CHECK(left.vertices[3].basis_matrix() == GaussMatrix2{vec(-1, 0, -1, 1), vec(0, 1, 0, 1)});

    // The two chambers share exactly the wall.
    auto lk = circle_keys(left), rk = circle_keys(right);
    CHECK(lk != rk);
    std::set<PedoeVector> both;
    for (const auto& k : lk) both.insert(k);
    int shared = 0;
    for (const auto& k : rk) shared += both.count(k);
    CHECK(shared == 3);
}

TEST_CASE("complete_wall output is independent of the zero-sum representative") {
    LaxVector a = lax_canonical(vec(3, 2, 3, -2));
    LaxVector b = lax_canonical(vec(5, 2, 4, -4));
    LaxVector c = lax_canonical(vec(3, 5, 6, -1));

    auto chamber_pair_keys = [](const Superbasis& s) {
        auto [l, r] = complete_wall(s);
        std::set<std::array<PedoeVector, 4>> keys{circle_keys(l), circle_keys(r)};
        return keys;
    };

    Superbasis s0 = superbasis_zero_sum(a, b, c);
    auto expect = chamber_pair_keys(s0);

    // Unit rescalings of the whole triple and permutations of the inputs
    // give the same unordered chamber pair.
    for (GaussianInt e : gaussian_units()) {
        Superbasis s{e * s0.u, e * s0.v, e * s0.w};
        CHECK(chamber_pair_keys(s) == expect);
    }
    std::array<LaxVector, 3> in{a, b, c};
    std::sort(in.begin(), in.end());
    do {
        CHECK(chamber_pair_keys(superbasis_zero_sum(in[0], in[1], in[2])) == expect);
    } while (std::next_permutation(in.begin(), in.end()));
}

TEST_CASE("every face of a completed chamber is a superbasis and contains its labels") {
    LaxVector u = lax_canonical(vec(1, 0, 0, 0));
    LaxVector v = lax_canonical(vec(0, 0, 0, -1));
    LaxVector w = lax_canonical(vec(-1, 0, 0, 1));
    auto [left, right] = complete_wall(superbasis_zero_sum(u, v, w));
    for (const Chamber& ch : {left, right}) {
        for (int k = 0; k < 4; ++k) {
            auto wall = ch.wall_opposite(k);
            CHECK(is_superbasis(wall[0], wall[1], wall[2]));
        }
        for (const Chamber::Edge& e : ch.edges) {
            CHECK(contains_lax(ch.vertices[e.a], e.label));
            CHECK(contains_lax(ch.vertices[e.b], e.label));
        }
    }
}

TEST_CASE("lattice_equal") {
    GaussVec2 u = vec(1, 0, 0, 0), v = vec(0, 0, 1, 0);
    LaxLattice id = LaxLattice::from_basis(u, v);
    CHECK(lattice_equal(id, LaxLattice::from_basis(u + v, v)));
    CHECK(lattice_equal(id, LaxLattice::from_basis(times_i(u), times_i(v))));
    // swapping the basis reverses orientation
    CHECK_FALSE(lattice_equal(id, LaxLattice::from_basis(v, u)));
    CHECK_THROWS_AS(LaxLattice::from_basis(u, vec(0, 0, 2, 0)), std::domain_error);

    // equivalence relation on a small pool
    std::vector<LaxLattice> pool{
        id,
        LaxLattice::from_basis(u + v, v),
        LaxLattice::from_basis(v, u),
        LaxLattice::from_basis(vec(0, 5, 5, 1), vec(-4, 5, 4, 5)),
    };
    for (const auto& a : pool) CHECK(lattice_equal(a, a));
    for (const auto& a : pool)
        for (const auto& b : pool) CHECK(lattice_equal(a, b) == lattice_equal(b, a));
}

TEST_CASE("lattice keys collide exactly when lattices are equal") {
    std::vector<LaxLattice> pool{
        LaxLattice::from_basis(vec(1, 0, 0, 0), vec(0, 0, 1, 0)),
        LaxLattice::from_basis(vec(1, 0, 1, 0), vec(0, 0, 1, 0)),
        LaxLattice::from_basis(vec(0, 0, 1, 0), vec(1, 0, 0, 0)),
        LaxLattice::from_basis(vec(0, 0, 0, -1), vec(0, -1, -1, 0)),
        LaxLattice::from_basis(vec(-1, 0, 0, 1), vec(0, 1, 0, 0)),
        LaxLattice::from_basis(vec(-1, 0, -1, 1), vec(0, 1, 0, 1)),
    };
    for (const auto& a : pool)
        for (const auto& b : pool) {
            bool same_key = pedoe(circle_from_lattice(a)) == pedoe(circle_from_lattice(b));
            CHECK(same_key == lattice_equal(a, b));
        }
}

TEST_CASE("contains_lax") {
    LaxLattice id = LaxLattice::from_basis(vec(1, 0, 0, 0), vec(0, 0, 1, 0));
    CHECK(contains_lax(id, lax_canonical(vec(1, 0, 1, 0))));
    CHECK_FALSE(contains_lax(id, lax_canonical(vec(1, 0, 0, 1))));
    CHECK_FALSE(contains_lax(id, lax_canonical(vec(0, 1, 1, 0))));
    // the lattice of a circle contains the lax vectors of its tangency points
    LaxLattice strip = LaxLattice::from_basis(vec(0, 5, 5, 1), vec(-4, 5, 4, 5));
    CHECK(contains_lax(strip, lax_canonical(vec(0, 5, 5, 1))));
    CHECK(contains_lax(strip, lax_canonical(vec(-4, 5, 4, 5))));
}

TEST_CASE("court of the identity lattice") {
    LaxLattice id = LaxLattice::from_basis(vec(1, 0, 0, 0), vec(0, 0, 1, 0));

    CourtReport r1 = court_check(id, 1);
    CHECK(r1.ok());
    auto has_title = [&](long long x, long long y) {
        return std::find(r1.titles.begin(), r1.titles.end(), std::make_pair(x, y)) !=
               r1.titles.end();
    };
    CHECK(has_title(1, 0));
    CHECK(has_title(0, 1));
    CHECK(has_title(1, 1));
    CHECK(has_title(-1, 1));  // the class of (1, -1)

    CourtReport r3 = court_check(id, 3);
    CHECK(r3.ok());
    CHECK(r3.superbasis_count == 1 + 3 + 6 + 12);

    CHECK_THROWS_AS(court_check(id, 7), std::domain_error);
}

TEST_CASE("parallelogram law instance from the topograph") {
    QuadraticForm f{1, 0, 1};
    CHECK(f.eval(1, 1) + f.eval(1, -1) == 2 * f.eval(1, 0) + 2 * f.eval(0, 1));
}
