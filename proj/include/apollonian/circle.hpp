#pragma once

#include "apollonian/gaussian.hpp"
#include "apollonian/lax.hpp"
#include "apollonian/rational.hpp"

namespace apollonian {

// Oriented Gaussian circle: curvature b, co-curvature bp, curvature-centre
// z (centre times curvature).  b and bp are even; exactly one of re(z),
// im(z) is even; and bp*b = N(z) - 1.  b > 0 means clockwise (interior on
// the right); a negative-curvature circle bounds its complement; b = 0 is a
// line, in which case z is a unit normal pointing into the interior and
// bp/2 is the signed offset of the line along that normal.
struct Circle {
    long long b = 0;
    long long bp = 0;
    GaussianInt z;

    friend constexpr bool operator==(const Circle&, const Circle&) = default;
    constexpr auto operator<=>(const Circle&) const = default;
};

constexpr bool circle_invariants_hold(const Circle& c) {
    bool parity = (c.b % 2 == 0) && (c.bp % 2 == 0) &&
                  ((c.z.re % 2 == 0) != (c.z.im % 2 == 0));
    return parity && c.bp * c.b == norm(c.z) - 1;
}

constexpr Circle reorient(const Circle& c) { return {-c.b, -c.bp, -c.z}; }

// Image of the rightward-oriented real line under the Moebius map of M.
// Curvature 2 Im(beta conj(delta)), co-curvature 2 Im(alpha conj(gamma)),
// curvature-centre i (gamma conj(beta) - alpha conj(delta)) for columns
// (alpha, beta), (gamma, delta).
Circle circle_from_matrix(const GaussMatrix2& m);
Circle circle_from_lattice(const LaxLattice& lattice);

// PSL matrices give even re(z), odd im(z); the nontrivial coset the opposite.
constexpr CosetClass parity_class(const Circle& c) {
    return c.z.re % 2 == 0 ? CosetClass::PSL : CosetClass::NonPSL;
}

// Hermitian form with matrix (a, b; conj(b), d), integer valued on Z[i]^2.
// h(u, v) is linear in u and conjugate-linear in v.
struct HermitianForm {
    long long a = 0;
    long long d = 0;
    GaussianInt b;

    static constexpr HermitianForm curvature() { return {0, 2, {0, 0}}; }
    static constexpr HermitianForm cocurvature() { return {2, 0, {0, 0}}; }
    static constexpr HermitianForm centre_re() { return {0, 0, {1, 0}}; }
    static constexpr HermitianForm centre_im() { return {0, 0, {0, -1}}; }
};

constexpr GaussianInt herm_eval(const HermitianForm& h, GaussVec2 u, GaussVec2 v) {
    return h.a * (u.x * conj(v.x)) + h.b * (u.x * conj(v.y)) +
           conj(h.b) * (u.y * conj(v.x)) + h.d * (u.y * conj(v.y));
}

constexpr long long herm_imag(const HermitianForm& h, GaussVec2 u, GaussVec2 v) {
    return herm_eval(h, u, v).im;
}

// Value of H = Im(h) at a kingdom vertex: well defined by H1 and
// invariance under scaling the basis by i.
constexpr long long hermitian_vertex_value(const HermitianForm& h, const LaxLattice& L) {
    return herm_imag(h, L.u, L.v);
}

// The linear Descartes rule for Hermitian forms,
//   H(w-iv, iu-v) + H(w+iv, iu+v) = 2 (H(u, iv) + H(v, iw) + H(w, iu)),
// which must hold for every integer form and zero-sum superbasis.
bool hermitian_descartes_check(const HermitianForm& h, const Superbasis& s);

// h(w-iv,iu-v) + h(w+iv,iu+v) - h(iv,v) - h(iw,w) - h(iu,u); real for any
// Hermitian form when u + v + w = 0.
GaussianInt hermitian_lemma_quantity(const HermitianForm& h, const Superbasis& s);

// Exact point membership: b N(p) - 2 Re(p conj(q) conj(z)) + bp N(q) = 0
// in homogeneous coordinates (p : q); infinity lies exactly on lines.
bool point_on_circle(const Circle& c, const ProjectivePoint& pt);

bool externally_tangent(const Circle& c1, const Circle& c2);

// The unique common point of two externally tangent circles,
// (z1 + z2) / (b1 + b2), as a canonical primitive pair; two parallel lines
// meet at infinity.
ProjectivePoint tangency_point(const Circle& c1, const Circle& c2);

// Euclidean data for rendering; the only consumers convert to float.
struct EuclideanShape {
    bool is_line = false;
    // circle form
    Rational cx, cy, radius;
    // line form: points p with <p, normal> = offset, interior on the
    // normal side
    GaussianInt normal;
    Rational offset;
};

EuclideanShape euclidean_shape(const Circle& c);

// Closed-region and curve intersection tests against a window, exact.
bool disk_meets_window(const Circle& c, const RationalRect& w);
bool curve_meets_window(const Circle& c, const RationalRect& w);

}  // namespace apollonian
