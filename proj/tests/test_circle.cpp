#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "apollonian/circle.hpp"
#include "apollonian/verify.hpp"

using namespace apollonian;

namespace {

GaussianInt gi(long long re, long long im) { return {re, im}; }
GaussVec2 vec(long long xr, long long xi, long long yr, long long yi) {
    return {gi(xr, xi), gi(yr, yi)};
}

}  // namespace

TEST_CASE("circle_from_matrix on the base chamber vertices") {
    CHECK(circle_from_matrix(GaussMatrix2::identity()) == Circle{0, 0, gi(0, -1)});
    CHECK(circle_from_matrix({vec(-1, 0, 0, 1), vec(0, 1, 0, 0)}) == Circle{0, 2, gi(0, 1)});
    CHECK(circle_from_matrix({vec(-1, 0, -1, 1), vec(0, 1, 0, 1)}) == Circle{2, 2, gi(2, 1)});
    CHECK(circle_from_matrix({vec(0, 0, 0, -1), vec(0, -1, -1, 0)}) == Circle{2, 0, gi(0, 1)});
    CHECK_THROWS_AS(circle_from_matrix({vec(2, 0, 0, 0), vec(0, 0, 1, 0)}), std::domain_error);
}

TEST_CASE("circle_from_lattice is constant on lattice classes") {
    LaxLattice id = LaxLattice::from_basis(vec(1, 0, 0, 0), vec(0, 0, 1, 0));
    CHECK(circle_from_lattice(id) == Circle{0, 0, gi(0, -1)});
    LaxLattice sheared = LaxLattice::from_basis(vec(1, 0, 1, 0), vec(0, 0, 1, 0));
    CHECK(circle_from_lattice(sheared) == Circle{0, 0, gi(0, -1)});

    sample::Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        GaussMatrix2 m = sample::unit_matrix(rng);
        Circle c = circle_from_matrix(m);
        // right multiplication by SL_2(Z) and unit scaling fix the circle
        GaussMatrix2 t = GaussMatrix2::from_rows(gi(1, 0), gi(1, 0), gi(0, 0), gi(1, 0));
        CHECK(circle_from_matrix(mat_mul(m, t)) == c);
        GaussMatrix2 s = GaussMatrix2::from_rows(gi(0, 0), gi(-1, 0), gi(1, 0), gi(0, 0));
        CHECK(circle_from_matrix(mat_mul(m, s)) == c);
        for (GaussianInt u : gaussian_units()) CHECK(circle_from_matrix(u * m) == c);
        // determinant -1 change of basis reverses orientation
        GaussMatrix2 r = GaussMatrix2::from_rows(gi(0, 0), gi(1, 0), gi(1, 0), gi(0, 0));
        CHECK(circle_from_matrix(mat_mul(m, r)) == reorient(c));
    }
}

TEST_CASE("parity matches the coset") {
    sample::Rng rng(17);
    for (int i = 0; i < 300; ++i) {
        GaussMatrix2 m = sample::unit_matrix(rng);
        Circle c = circle_from_matrix(m);
        CHECK(circle_invariants_hold(c));
        CHECK(parity_class(c) == coset_class(m));
    }
}

TEST_CASE("herm_eval on pinned forms") {
    GaussVec2 u = vec(3, 1, -2, 4), v = vec(1, -1, 0, 2);
    // curvature form picks out 2 Im(u_y conj(v_y))
    CHECK(herm_imag(HermitianForm::curvature(), u, v) == 2 * (u.y * conj(v.y)).im);
    // diagonal values of any form are real
    HermitianForm h{3, -2, gi(1, 2)};
    CHECK(herm_imag(h, vec(1, 0, 0, 0), vec(1, 0, 0, 0)) == 0);
    CHECK(herm_eval(h, vec(1, 0, 0, 0), vec(1, 0, 0, 0)) == gi(3, 0));
    // single off-diagonal term
    HermitianForm offdiag{0, 0, gi(0, 1)};
    CHECK(herm_eval(offdiag, vec(1, 0, 0, 0), vec(0, 0, 1, 0)) == gi(0, 1));
    CHECK(herm_imag(offdiag, vec(1, 0, 0, 0), vec(0, 0, 1, 0)) == 1);
}

TEST_CASE("hermitian vertex values are the circle parameters") {
    sample::Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        GaussMatrix2 m = sample::unit_matrix(rng);
        LaxLattice L{m.c0, m.c1};
        Circle c = circle_from_lattice(L);
        CHECK(hermitian_vertex_value(HermitianForm::curvature(), L) == c.b);
        CHECK(hermitian_vertex_value(HermitianForm::cocurvature(), L) == c.bp);
        CHECK(hermitian_vertex_value(HermitianForm::centre_re(), L) == c.z.re);
        CHECK(hermitian_vertex_value(HermitianForm::centre_im(), L) == c.z.im);
    }
}

TEST_CASE("H is well defined at a vertex") {
    HermitianForm h{2, -3, gi(4, 1)};
    LaxLattice a = LaxLattice::from_basis(vec(1, 0, 0, 0), vec(0, 0, 1, 0));
    LaxLattice b = LaxLattice::from_basis(vec(1, 0, 1, 0), vec(0, 0, 1, 0));
    CHECK(hermitian_vertex_value(h, a) == hermitian_vertex_value(h, b));
    LaxLattice c = LaxLattice::from_basis(times_i(vec(1, 0, 0, 0)), times_i(vec(0, 0, 1, 0)));
    CHECK(hermitian_vertex_value(h, a) == hermitian_vertex_value(h, c));
}

TEST_CASE("H2 identity on the base superbasis and at random") {
    LaxVector u = lax_canonical(vec(1, 0, 0, 0));
    LaxVector v = lax_canonical(vec(0, 0, 0, -1));
    LaxVector w = lax_canonical(vec(-1, 0, 0, 1));
    Superbasis s = superbasis_zero_sum(u, v, w);
    CHECK(hermitian_descartes_check(HermitianForm::curvature(), s));
    CHECK(hermitian_descartes_check(HermitianForm{0, 0, gi(0, 0)}, s));

    sample::Rng rng(29);
    for (int i = 0; i < 1000; ++i) {
        Superbasis sb = sample::superbasis(rng, 20);
        HermitianForm h = sample::hermitian_form(rng, 9);
        CHECK(hermitian_descartes_check(h, sb));
        CHECK(hermitian_lemma_quantity(h, sb).im == 0);
    }
}

TEST_CASE("tangency points") {
    Circle c1{2, 0, gi(0, 1)};   // radius 1/2 at i/2
    Circle real_line{0, 0, gi(0, -1)};
    CHECK(tangency_point(c1, real_line) == ProjectivePoint::from(gi(0, 0), gi(1, 0)));

    Circle c3{2, 2, gi(2, 1)};
    // (z1+z2)/(b1+b2) = (2+2i)/4 = (1+i)/2; primitive form (1, 1-i)
    ProjectivePoint t = tangency_point(c3, c1);
    CHECK(t == ProjectivePoint::from(gi(1, 1), gi(2, 0)));
    CHECK(t.v.x == gi(1, 0));
    CHECK(t.v.y == gi(1, -1));
    CHECK(point_on_circle(c1, t));
    CHECK(point_on_circle(c3, t));

    // two parallel lines meet at infinity
    Circle line_up{0, 2, gi(0, 1)};
    CHECK(tangency_point(real_line, line_up) == ProjectivePoint::infinity());
    CHECK(point_on_circle(real_line, ProjectivePoint::infinity()));

    CHECK_THROWS_AS(tangency_point(c1, c1), std::domain_error);
}

TEST_CASE("tangency point lies on both circles at random") {
    // The images of the parallel lines Im z = 0 and Im z = 1 under a common
    // map are externally tangent at the image of infinity (after fixing the
    // second line's orientation).
    sample::Rng rng(31);
    GaussMatrix2 up = GaussMatrix2::from_rows(gi(1, 0), gi(0, 1), gi(0, 0), gi(1, 0));
    for (int i = 0; i < 200; ++i) {
        GaussMatrix2 m = sample::unit_matrix(rng);
        Circle a = circle_from_matrix(m);
        Circle c = reorient(circle_from_matrix(mat_mul(m, up)));
        REQUIRE(externally_tangent(a, c));
        ProjectivePoint p = tangency_point(a, c);
        CHECK(point_on_circle(a, p));
        CHECK(point_on_circle(c, p));
        CHECK(p == mobius_apply(m, ProjectivePoint::infinity()));
    }
}

TEST_CASE("euclidean shapes") {
    EuclideanShape s = euclidean_shape(Circle{2, 0, gi(0, 1)});
    CHECK_FALSE(s.is_line);
    CHECK(s.cx == Rational(0));
    CHECK(s.cy == Rational(1, 2));
    CHECK(s.radius == Rational(1, 2));

    EuclideanShape neg = euclidean_shape(Circle{-2, 0, gi(0, -1)});
    CHECK(neg.radius == Rational(1, 2));
    CHECK(neg.cy == Rational(1, 2));

    EuclideanShape line = euclidean_shape(Circle{0, 0, gi(0, -1)});
    CHECK(line.is_line);
    CHECK(line.normal == gi(0, -1));
    CHECK(line.offset == Rational(0));

    // the line Im z = 1 oriented leftward: normal i, offset 1
    EuclideanShape up = euclidean_shape(Circle{0, 2, gi(0, 1)});
    CHECK(up.is_line);
    CHECK(up.normal == gi(0, 1));
    CHECK(up.offset == Rational(1));

    // the vertical line Re z = 1: image of z -> iz + 1
    Circle v = circle_from_matrix(GaussMatrix2::from_rows(gi(0, 1), gi(1, 0), gi(0, 0), gi(1, 0)));
    CHECK(v == Circle{0, 2, gi(1, 0)});
    EuclideanShape vert = euclidean_shape(v);
    CHECK(vert.normal == gi(1, 0));
    CHECK(vert.offset == Rational(1));
}

TEST_CASE("reorient") {
    Circle c{2, 0, gi(0, 1)};
    CHECK(reorient(c) == Circle{-2, 0, gi(0, -1)});
    CHECK(reorient(reorient(c)) == c);
    CHECK(circle_invariants_hold(reorient(c)));
}

TEST_CASE("window predicates") {
    RationalRect w{Rational(0), Rational(0), Rational(1), Rational(1)};
    Circle small{2, 0, gi(0, 1)};  // disk around i/2
    CHECK(disk_meets_window(small, w));
    CHECK(curve_meets_window(small, w));

    Circle far{2, 50, gi(-10, 1)};  // disk around -5 + i/2
    CHECK(circle_invariants_hold(far));
    CHECK_FALSE(disk_meets_window(far, w));
    CHECK_FALSE(curve_meets_window(far, w));

    // line y = 0 bounds the window from below
    Circle real_line{0, 0, gi(0, -1)};
    CHECK(disk_meets_window(real_line, w));
    CHECK(curve_meets_window(real_line, w));
    // line y = 3 oriented downward has the window deep inside its half-plane
    Circle high{0, -6, gi(0, -1)};
    CHECK(circle_invariants_hold(high));
    CHECK(disk_meets_window(high, w));
    CHECK_FALSE(curve_meets_window(high, w));
}
