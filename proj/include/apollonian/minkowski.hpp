#pragma once

#include <array>

#include "apollonian/circle.hpp"
#include "apollonian/gaussian.hpp"
#include "apollonian/rational.hpp"

namespace apollonian {

// Pedoe image of an oriented circle: (b, b', Re z, Im z), a point of the
// unit hyperboloid of Minkowski spacetime in the isotropic basis
//   M = ((0,-1/2,0,0), (-1/2,0,0,0), (0,0,1,0), (0,0,0,1)).
// Doubles as the canonical key for circles and lax lattices.
struct PedoeVector {
    long long b = 0, bp = 0, r = 0, m = 0;

    friend constexpr bool operator==(const PedoeVector&, const PedoeVector&) = default;
    constexpr auto operator<=>(const PedoeVector&) const = default;

    constexpr long long operator[](int i) const {
        return i == 0 ? b : i == 1 ? bp : i == 2 ? r : m;
    }
    constexpr long long& operator[](int i) {
        return i == 0 ? b : i == 1 ? bp : i == 2 ? r : m;
    }
};

constexpr PedoeVector operator+(PedoeVector a, PedoeVector b) {
    return {a.b + b.b, a.bp + b.bp, a.r + b.r, a.m + b.m};
}
constexpr PedoeVector operator-(PedoeVector a, PedoeVector b) {
    return {a.b - b.b, a.bp - b.bp, a.r - b.r, a.m - b.m};
}
constexpr PedoeVector operator-(PedoeVector a) { return {-a.b, -a.bp, -a.r, -a.m}; }
constexpr PedoeVector operator*(long long s, PedoeVector a) {
    return {s * a.b, s * a.bp, s * a.r, s * a.m};
}

constexpr PedoeVector pedoe(const Circle& c) { return {c.b, c.bp, c.z.re, c.z.im}; }
Circle circle_from_pedoe(const PedoeVector& v);

// 2 <v1, v2>, always an integer.
constexpr long long twice_mink_inner(const PedoeVector& v1, const PedoeVector& v2) {
    return -v1.b * v2.bp - v1.bp * v2.b + 2 * v1.r * v2.r + 2 * v1.m * v2.m;
}

constexpr Rational mink_inner(const PedoeVector& v1, const PedoeVector& v2) {
    return Rational(twice_mink_inner(v1, v2), 2);
}

// 2M as an integer matrix.
constexpr std::array<std::array<long long, 4>, 4> twice_minkowski_form() {
    return {{{0, -1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}};
}

enum class PairClass { ExternallyTangent, InternallyTangent, Orthogonal, Meeting, Disjoint };

struct PairClassification {
    PairClass kind;
    Rational cos_angle;  // the inner product; the cosine when |.| <= 1
};

PairClassification classify_pair(const Circle& c1, const Circle& c2);

// Ordered quadruple of Pedoe vectors, the columns of the matrix A.
struct Quadruple {
    std::array<PedoeVector, 4> cols;

    friend constexpr bool operator==(const Quadruple&, const Quadruple&) = default;
    constexpr auto operator<=>(const Quadruple&) const = default;
};

std::array<std::array<Rational, 4>, 4> gram(const Quadruple& q);

// Gram matrix equal to R: unit diagonal, -1 off-diagonal.
bool is_descartes(const Quadruple& q);

// 2(a^2+b^2+c^2+d^2) = (a+b+c+d)^2.
constexpr bool descartes_quadratic_holds(long long a, long long b, long long c, long long d) {
    long long s = a + b + c + d;
    return 2 * (a * a + b * b + c * c + d * d) == s * s;
}

// The other completion d' of a triple a, b, c: d + d' = 2(a+b+c).
constexpr long long descartes_linear_completion(long long a, long long b, long long c,
                                                long long d) {
    return 2 * (a + b + c) - d;
}

// Replace column i by 2 (sum of the others) - column i.  An involution that
// preserves the Descartes property; realizes chamber adjacency.
Quadruple swap_at(const Quadruple& q, int i);

// +1 / -1 for det A = +8 / -8.
int ordering_sign(const Quadruple& q);

// Integer Lorentz transformation: N^T M N = M, det N = +1, forward in time.
struct LorentzMatrix {
    std::array<std::array<long long, 4>, 4> a{};

    constexpr long long operator()(int i, int j) const { return a[i][j]; }
    constexpr long long& operator()(int i, int j) { return a[i][j]; }

    friend constexpr bool operator==(const LorentzMatrix&, const LorentzMatrix&) = default;

    static constexpr LorentzMatrix identity() {
        LorentzMatrix n;
        for (int i = 0; i < 4; ++i) n(i, i) = 1;
        return n;
    }
};

LorentzMatrix lorentz_mul(const LorentzMatrix& a, const LorentzMatrix& b);
PedoeVector lorentz_apply(const LorentzMatrix& n, const PedoeVector& v);
Quadruple lorentz_apply(const LorentzMatrix& n, const Quadruple& q);

// N^T M N = M (hence det = +-1), det = +1, and N t forward for t = (1,1,0,0).
bool is_lorentz(const LorentzMatrix& n);

// The spinor map PGL_2(Z[i]) -> SO+_{1,3}(Z): write a circle as the
// Hermitian matrix (bp, r+mi; r-mi, b) and act by H -> M H conj(M)^T; the
// resulting integer matrix N satisfies pedoe(M . C) = N pedoe(C) for every
// circle C.
LorentzMatrix spinor(const GaussMatrix2& m);

// The unique N in SO+_{1,3}(Z) with N B = A, for positively ordered
// Descartes quadruples A and B; computed exactly as A B^-1 over Q with
// integrality asserted at the boundary.
LorentzMatrix relate_quadruples(const Quadruple& a, const Quadruple& b);

}  // namespace apollonian
