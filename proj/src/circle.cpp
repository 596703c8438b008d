#include "apollonian/circle.hpp"

namespace apollonian {

Circle circle_from_matrix(const GaussMatrix2& m) {
    if (!has_unit_det(m))
        throw std::domain_error("circle_from_matrix: determinant is not a unit");
    GaussianInt alpha = m.c0.x, beta = m.c0.y, gamma = m.c1.x, delta = m.c1.y;
    Circle c;
    c.b = 2 * (beta * conj(delta)).im;
    c.bp = 2 * (alpha * conj(gamma)).im;
    c.z = times_i(gamma * conj(beta) - alpha * conj(delta));
    if (!circle_invariants_hold(c))
        throw std::logic_error("circle_from_matrix: invariants violated");
    return c;
}

Circle circle_from_lattice(const LaxLattice& lattice) {
    return circle_from_matrix(lattice.basis_matrix());
}

bool hermitian_descartes_check(const HermitianForm& h, const Superbasis& s) {
    GaussVec2 u = s.u, v = s.v, w = s.w;
    if (!(u + v + w).is_zero())
        throw std::domain_error("hermitian_descartes_check: not zero-sum");
    GaussVec2 iu = times_i(u), iv = times_i(v), iw = times_i(w);
    long long lhs = herm_imag(h, w - iv, iu - v) + herm_imag(h, w + iv, iu + v);
    long long rhs = 2 * (herm_imag(h, u, iv) + herm_imag(h, v, iw) + herm_imag(h, w, iu));
    return lhs == rhs;
}

GaussianInt hermitian_lemma_quantity(const HermitianForm& h, const Superbasis& s) {
    GaussVec2 u = s.u, v = s.v, w = s.w;
    if (!(u + v + w).is_zero())
        throw std::domain_error("hermitian_lemma_quantity: not zero-sum");
    GaussVec2 iu = times_i(u), iv = times_i(v), iw = times_i(w);
    return herm_eval(h, w - iv, iu - v) + herm_eval(h, w + iv, iu + v) -
           herm_eval(h, iv, v) - herm_eval(h, iw, w) - herm_eval(h, iu, u);
}

bool point_on_circle(const Circle& c, const ProjectivePoint& pt) {
    GaussianInt p = pt.v.x, q = pt.v.y;
    long long value = c.b * norm(p) - 2 * (p * conj(q) * conj(c.z)).re + c.bp * norm(q);
    return value == 0;
}

bool externally_tangent(const Circle& c1, const Circle& c2) {
    // Pedoe inner product -1, scaled by 2 to stay integral.
    long long twice_inner =
        -c1.b * c2.bp - c1.bp * c2.b + 2 * c1.z.re * c2.z.re + 2 * c1.z.im * c2.z.im;
    return twice_inner == -2;
}

ProjectivePoint tangency_point(const Circle& c1, const Circle& c2) {
    if (!externally_tangent(c1, c2))
        throw std::domain_error("tangency_point: circles are not externally tangent");
    long long bsum = c1.b + c2.b;
    if (bsum == 0) return ProjectivePoint::infinity();
    return ProjectivePoint::from(c1.z + c2.z, GaussianInt{bsum});
}

EuclideanShape euclidean_shape(const Circle& c) {
    EuclideanShape s;
    if (c.b == 0) {
        s.is_line = true;
        s.normal = c.z;  // a unit, by bp*b = N(z) - 1
        s.offset = Rational(c.bp, 2);
        return s;
    }
    s.cx = Rational(c.z.re, c.b);
    s.cy = Rational(c.z.im, c.b);
    s.radius = Rational(1, c.b < 0 ? -c.b : c.b);
    return s;
}

namespace {

// <p, n> over the window, for a unit normal n.
std::pair<Rational, Rational> window_range_along(const GaussianInt& n, const RationalRect& w) {
    Rational lo = Rational(n.re) * w.x0 + Rational(n.im) * w.y0;
    Rational hi = Rational(n.re) * w.x1 + Rational(n.im) * w.y1;
    if (hi < lo) std::swap(lo, hi);
    return {lo, hi};
}

}  // namespace

bool disk_meets_window(const Circle& c, const RationalRect& w) {
    if (c.b == 0) {
        // Closed half-plane <p, normal> >= bp/2.
        auto [lo, hi] = window_range_along(c.z, w);
        return hi >= Rational(c.bp, 2);
    }
    EuclideanShape s = euclidean_shape(c);
    Rational r2 = s.radius * s.radius;
    if (c.b > 0) return dist2_point_rect(s.cx, s.cy, w) <= r2;
    // Complement of the open disk: misses the window only when the window
    // sits strictly inside the disk.
    return !(far_dist2_point_rect(s.cx, s.cy, w) < r2);
}

bool curve_meets_window(const Circle& c, const RationalRect& w) {
    if (c.b == 0) {
        auto [lo, hi] = window_range_along(c.z, w);
        Rational off = Rational(c.bp, 2);
        return lo <= off && off <= hi;
    }
    EuclideanShape s = euclidean_shape(c);
    Rational r2 = s.radius * s.radius;
    return dist2_point_rect(s.cx, s.cy, w) <= r2 &&
           r2 <= far_dist2_point_rect(s.cx, s.cy, w);
}

}  // namespace apollonian
