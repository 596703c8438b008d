#pragma once

#include <array>
#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace apollonian {

// Exact arithmetic over Z[i].  Values are plain int64 pairs; everything is
// immutable and safe to share.  The canonical associate of a nonzero value
// is the one with re > 0, im >= 0 (argument in [0, pi/2)), which picks
// exactly one element out of {v, iv, -v, -iv}.
struct GaussianInt {
    long long re = 0;
    long long im = 0;

    constexpr GaussianInt() = default;
    constexpr GaussianInt(long long r, long long i) : re(r), im(i) {}
    constexpr explicit GaussianInt(long long r) : re(r), im(0) {}

    friend constexpr bool operator==(const GaussianInt&, const GaussianInt&) = default;
    constexpr auto operator<=>(const GaussianInt&) const = default;

    constexpr bool is_zero() const { return re == 0 && im == 0; }
};

constexpr GaussianInt operator+(GaussianInt a, GaussianInt b) { return {a.re + b.re, a.im + b.im}; }
constexpr GaussianInt operator-(GaussianInt a, GaussianInt b) { return {a.re - b.re, a.im - b.im}; }
constexpr GaussianInt operator-(GaussianInt a) { return {-a.re, -a.im}; }
constexpr GaussianInt operator*(GaussianInt a, GaussianInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
constexpr GaussianInt operator*(long long s, GaussianInt a) { return {s * a.re, s * a.im}; }

constexpr GaussianInt conj(GaussianInt a) { return {a.re, -a.im}; }
constexpr GaussianInt times_i(GaussianInt a) { return {-a.im, a.re}; }
constexpr long long norm(GaussianInt a) { return a.re * a.re + a.im * a.im; }

constexpr bool is_unit(GaussianInt a) { return norm(a) == 1; }

constexpr std::array<GaussianInt, 4> gaussian_units() {
    return {GaussianInt{1, 0}, GaussianInt{0, 1}, GaussianInt{-1, 0}, GaussianInt{0, -1}};
}

// 1/u for a unit u.
constexpr GaussianInt unit_inverse(GaussianInt u) { return conj(u); }

constexpr bool is_canonical_associate(GaussianInt a) { return a.re > 0 && a.im >= 0; }

// The unit t such that t*a is the canonical associate of a.
constexpr GaussianInt canonical_unit(GaussianInt a) {
    if (a.is_zero()) throw std::domain_error("canonical_unit: zero has no canonical associate");
    for (GaussianInt u : gaussian_units())
        if (is_canonical_associate(u * a)) return u;
    throw std::logic_error("canonical_unit: unreachable");
}

constexpr GaussianInt canonical_associate(GaussianInt a) { return canonical_unit(a) * a; }

constexpr long long floor_div(long long n, long long d) {
    long long q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
    return q;
}

// Nearest integer to n/d (d > 0), ties toward -infinity.
constexpr long long round_nearest_ties_down(long long n, long long d) {
    return floor_div(2 * n + d - 1, 2 * d);
}

// Euclidean quotient with remainder of norm <= norm(b)/2.
constexpr GaussianInt nearest_quotient(GaussianInt a, GaussianInt b) {
    if (b.is_zero()) throw std::domain_error("nearest_quotient: division by zero");
    GaussianInt num = a * conj(b);
    long long d = norm(b);
    return {round_nearest_ties_down(num.re, d), round_nearest_ties_down(num.im, d)};
}

constexpr bool divides(GaussianInt d, GaussianInt a) {
    if (d.is_zero()) return a.is_zero();
    GaussianInt num = a * conj(d);
    long long n = norm(d);
    return num.re % n == 0 && num.im % n == 0;
}

constexpr GaussianInt exact_div(GaussianInt a, GaussianInt d) {
    if (d.is_zero()) throw std::domain_error("exact_div: division by zero");
    GaussianInt num = a * conj(d);
    long long n = norm(d);
    if (num.re % n != 0 || num.im % n != 0)
        throw std::domain_error("exact_div: not divisible");
    return {num.re / n, num.im / n};
}

// Euclidean gcd, unit-normalized to the canonical associate.
constexpr GaussianInt gauss_gcd(GaussianInt a, GaussianInt b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("gauss_gcd: gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        GaussianInt r = a - nearest_quotient(a, b) * b;
        a = b;
        b = r;
    }
    return canonical_associate(a);
}

inline std::string to_string(GaussianInt a) {
    std::string s = std::to_string(a.re);
    if (a.im != 0) {
        s += (a.im > 0 ? "+" : "-");
        s += std::to_string(std::llabs(a.im));
        s += "i";
    }
    return s;
}

// Column vector of Z[i]^2.
struct GaussVec2 {
    GaussianInt x, y;

    friend constexpr bool operator==(const GaussVec2&, const GaussVec2&) = default;
    constexpr auto operator<=>(const GaussVec2&) const = default;

    constexpr bool is_zero() const { return x.is_zero() && y.is_zero(); }
};

constexpr GaussVec2 operator+(GaussVec2 a, GaussVec2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr GaussVec2 operator-(GaussVec2 a, GaussVec2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr GaussVec2 operator-(GaussVec2 a) { return {-a.x, -a.y}; }
constexpr GaussVec2 operator*(GaussianInt s, GaussVec2 v) { return {s * v.x, s * v.y}; }
constexpr GaussVec2 times_i(GaussVec2 v) { return {times_i(v.x), times_i(v.y)}; }

inline std::string to_string(GaussVec2 v) {
    return "(" + to_string(v.x) + ", " + to_string(v.y) + ")";
}

// 2x2 matrix over Z[i], stored by columns.  As a Moebius transformation it
// acts by z -> (c0.x z + c1.x) / (c0.y z + c1.y), i.e. c0 is the image of
// infinity and c1 the image of 0 (in projective coordinates).
struct GaussMatrix2 {
    GaussVec2 c0, c1;

    friend constexpr bool operator==(const GaussMatrix2&, const GaussMatrix2&) = default;
    constexpr auto operator<=>(const GaussMatrix2&) const = default;

    static constexpr GaussMatrix2 identity() {
        return {{GaussianInt{1, 0}, GaussianInt{0, 0}}, {GaussianInt{0, 0}, GaussianInt{1, 0}}};
    }
    // Row layout (a b; c d) of the usual Moebius notation z -> (az+b)/(cz+d).
    static constexpr GaussMatrix2 from_rows(GaussianInt a, GaussianInt b,
                                            GaussianInt c, GaussianInt d) {
        return {{a, c}, {b, d}};
    }
};

constexpr GaussianInt mat_det(const GaussMatrix2& m) {
    return m.c0.x * m.c1.y - m.c1.x * m.c0.y;
}

constexpr GaussVec2 mat_apply(const GaussMatrix2& m, GaussVec2 v) {
    return {m.c0.x * v.x + m.c1.x * v.y, m.c0.y * v.x + m.c1.y * v.y};
}

constexpr GaussMatrix2 mat_mul(const GaussMatrix2& a, const GaussMatrix2& b) {
    return {mat_apply(a, b.c0), mat_apply(a, b.c1)};
}

constexpr GaussMatrix2 operator*(GaussianInt s, const GaussMatrix2& m) {
    return {s * m.c0, s * m.c1};
}

constexpr bool has_unit_det(const GaussMatrix2& m) { return is_unit(mat_det(m)); }

// Exact inverse for unit-determinant matrices: adjugate times 1/det.
constexpr GaussMatrix2 mat_inverse(const GaussMatrix2& m) {
    GaussianInt d = mat_det(m);
    if (!is_unit(d)) throw std::domain_error("mat_inverse: determinant is not a unit");
    GaussianInt s = unit_inverse(d);
    return {{s * m.c1.y, s * -m.c0.y}, {s * -m.c1.x, s * m.c0.x}};
}

enum class CosetClass { PSL, NonPSL };

// PSL iff det in {1, -1}.  Scaling M by a unit changes det by a square of a
// unit, i.e. by +-1, so the class is well defined on PGL_2(Z[i]).
constexpr CosetClass coset_class(const GaussMatrix2& m) {
    GaussianInt d = mat_det(m);
    if (!is_unit(d)) throw std::domain_error("coset_class: determinant is not a unit");
    return d.im == 0 ? CosetClass::PSL : CosetClass::NonPSL;
}

// Element of P^1(Q(i)) held by its canonical primitive representative:
// coordinates divided by their gcd, then scaled so the first nonzero
// coordinate is a canonical associate.  (1, 0) is the point at infinity.
struct ProjectivePoint {
    GaussVec2 v;

    friend constexpr bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
    constexpr auto operator<=>(const ProjectivePoint&) const = default;

    static constexpr ProjectivePoint from(GaussianInt p, GaussianInt q) {
        if (p.is_zero() && q.is_zero())
            throw std::domain_error("ProjectivePoint: (0, 0) is not projective");
        GaussianInt g = gauss_gcd(p, q);
        p = exact_div(p, g);
        q = exact_div(q, g);
        GaussianInt lead = p.is_zero() ? q : p;
        GaussianInt t = canonical_unit(lead);
        return ProjectivePoint{{t * p, t * q}};
    }

    static constexpr ProjectivePoint infinity() {
        return ProjectivePoint{{GaussianInt{1, 0}, GaussianInt{0, 0}}};
    }

    constexpr bool is_infinity() const { return v.y.is_zero(); }
};

constexpr ProjectivePoint mobius_apply(const GaussMatrix2& m, ProjectivePoint x) {
    if (!has_unit_det(m)) throw std::domain_error("mobius_apply: determinant is not a unit");
    GaussVec2 w = mat_apply(m, x.v);
    return ProjectivePoint::from(w.x, w.y);
}

}  // namespace apollonian
