#include "apollonian/minkowski.hpp"

#include <cstdlib>

namespace apollonian {

namespace {

using int128 = __int128;

constexpr long long kEntryBound = 1LL << 26;

void check_entry_bounds(const std::array<std::array<long long, 4>, 4>& a) {
    for (const auto& row : a)
        for (long long e : row)
            if (std::llabs(e) >= kEntryBound)
                throw std::domain_error("4x4 determinant: entries out of exact range");
}

long long det4_exact(const std::array<std::array<long long, 4>, 4>& a) {
    check_entry_bounds(a);
    auto minor3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) -> int128 {
        return int128(a[r0][c0]) * (int128(a[r1][c1]) * a[r2][c2] - int128(a[r1][c2]) * a[r2][c1]) -
               int128(a[r0][c1]) * (int128(a[r1][c0]) * a[r2][c2] - int128(a[r1][c2]) * a[r2][c0]) +
               int128(a[r0][c2]) * (int128(a[r1][c0]) * a[r2][c1] - int128(a[r1][c1]) * a[r2][c0]);
    };
    int128 det = int128(a[0][0]) * minor3(1, 2, 3, 1, 2, 3) -
                 int128(a[0][1]) * minor3(1, 2, 3, 0, 2, 3) +
                 int128(a[0][2]) * minor3(1, 2, 3, 0, 1, 3) -
                 int128(a[0][3]) * minor3(1, 2, 3, 0, 1, 2);
    return static_cast<long long>(det);
}

// det mod a prime; enough to read off the sign when det is known to be +-1.
long long det4_mod(const std::array<std::array<long long, 4>, 4>& in, long long p) {
    std::array<std::array<long long, 4>, 4> a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a[i][j] = ((in[i][j] % p) + p) % p;
    auto powmod = [&](long long base, long long e) {
        long long acc = 1;
        base %= p;
        while (e) {
            if (e & 1) acc = int128(acc) * base % p;
            base = int128(base) * base % p;
            e >>= 1;
        }
        return acc;
    };
    long long det = 1;
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int row = col; row < 4; ++row)
            if (a[row][col] != 0) { pivot = row; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = p - det;
        }
        det = int128(det) * a[col][col] % p;
        long long inv = powmod(a[col][col], p - 2);
        for (int row = col + 1; row < 4; ++row) {
            long long f = int128(a[row][col]) * inv % p;
            for (int j = col; j < 4; ++j)
                a[row][j] = ((a[row][j] - int128(f) * a[col][j]) % p + p) % p;
        }
    }
    return det % p;
}

}  // namespace

Circle circle_from_pedoe(const PedoeVector& v) {
    Circle c{v.b, v.bp, GaussianInt{v.r, v.m}};
    if (!circle_invariants_hold(c))
        throw std::domain_error("circle_from_pedoe: not a Gaussian circle");
    return c;
}

PairClassification classify_pair(const Circle& c1, const Circle& c2) {
    Rational inner = mink_inner(pedoe(c1), pedoe(c2));
    if (inner == Rational(-1)) return {PairClass::ExternallyTangent, inner};
    if (inner == Rational(1)) return {PairClass::InternallyTangent, inner};
    if (inner.is_zero()) return {PairClass::Orthogonal, inner};
    if (rat_abs(inner) < Rational(1)) return {PairClass::Meeting, inner};
    return {PairClass::Disjoint, inner};
}

std::array<std::array<Rational, 4>, 4> gram(const Quadruple& q) {
    std::array<std::array<Rational, 4>, 4> g;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g[i][j] = mink_inner(q.cols[i], q.cols[j]);
    return g;
}

bool is_descartes(const Quadruple& q) {
    auto g = gram(q);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rational want = i == j ? Rational(1) : Rational(-1);
            if (g[i][j] != want) return false;
        }
    return true;
}

Quadruple swap_at(const Quadruple& q, int i) {
    if (i < 0 || i > 3) throw std::domain_error("swap_at: index out of range");
    if (!is_descartes(q)) throw std::domain_error("swap_at: quadruple is not Descartes");
    PedoeVector sum{};
    for (int j = 0; j < 4; ++j)
        if (j != i) sum = sum + q.cols[j];
    Quadruple out = q;
    out.cols[i] = 2 * sum - q.cols[i];
    if (!is_descartes(out)) throw std::logic_error("swap_at: swap broke the Gram matrix");
    return out;
}

int ordering_sign(const Quadruple& q) {
    std::array<std::array<long long, 4>, 4> a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a[i][j] = q.cols[j][i];
    long long det = det4_exact(a);
    if (det == 8) return 1;
    if (det == -8) return -1;
    throw std::domain_error("ordering_sign: |det| != 8, not a Descartes quadruple");
}

LorentzMatrix lorentz_mul(const LorentzMatrix& a, const LorentzMatrix& b) {
    LorentzMatrix out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            long long s = 0;
            for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
            out(i, j) = s;
        }
    return out;
}

PedoeVector lorentz_apply(const LorentzMatrix& n, const PedoeVector& v) {
    PedoeVector out;
    for (int i = 0; i < 4; ++i) {
        long long s = 0;
        for (int k = 0; k < 4; ++k) s += n(i, k) * v[k];
        out[i] = s;
    }
    return out;
}

Quadruple lorentz_apply(const LorentzMatrix& n, const Quadruple& q) {
    Quadruple out;
    for (int i = 0; i < 4; ++i) out.cols[i] = lorentz_apply(n, q.cols[i]);
    return out;
}

bool is_lorentz(const LorentzMatrix& n) {
    check_entry_bounds(n.a);
    // N^T (2M) N = 2M, computed exactly; this pins det N = +-1.
    auto m2 = twice_minkowski_form();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            long long s = 0;
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) s += n(k, i) * m2[k][l] * n(l, j);
            if (s != m2[i][j]) return false;
        }
    // Sign of the determinant, exact because det is +-1.
    long long p = 1'000'000'007LL;
    long long d = det4_mod(n.a, p);
    if (d != 1 && d != p - 1) throw std::logic_error("is_lorentz: det not +-1");
    if (d != 1) return false;
    // Forward time: the image of t = (1,1,0,0) must keep b + bp positive.
    long long t0 = n(0, 0) + n(0, 1), t1 = n(1, 0) + n(1, 1);
    return t0 + t1 > 0;
}

LorentzMatrix spinor(const GaussMatrix2& m) {
    if (!has_unit_det(m)) throw std::domain_error("spinor: determinant is not a unit");
    GaussianInt m11 = m.c0.x, m12 = m.c1.x, m21 = m.c0.y, m22 = m.c1.y;
    LorentzMatrix n;
    for (int col = 0; col < 4; ++col) {
        // Hermitian matrix of the basis vector e_col of (b, bp, r, m) space.
        PedoeVector e{};
        e[col] = 1;
        GaussianInt h11{e.bp, 0}, h12{e.r, e.m}, h21{e.r, -e.m}, h22{e.b, 0};
        GaussianInt p11 = m11 * h11 + m12 * h21, p12 = m11 * h12 + m12 * h22;
        GaussianInt p21 = m21 * h11 + m22 * h21, p22 = m21 * h12 + m22 * h22;
        GaussianInt q11 = p11 * conj(m11) + p12 * conj(m12);
        GaussianInt q12 = p11 * conj(m21) + p12 * conj(m22);
        GaussianInt q21 = p21 * conj(m11) + p22 * conj(m12);
        GaussianInt q22 = p21 * conj(m21) + p22 * conj(m22);
        if (q11.im != 0 || q22.im != 0 || q21 != conj(q12))
            throw std::logic_error("spinor: action did not return a Hermitian matrix");
        n(0, col) = q22.re;
        n(1, col) = q11.re;
        n(2, col) = q12.re;
        n(3, col) = q12.im;
    }
    if (!is_lorentz(n)) throw std::logic_error("spinor: image is not proper orthochronous");
    return n;
}

LorentzMatrix relate_quadruples(const Quadruple& a, const Quadruple& b) {
    if (!is_descartes(a) || !is_descartes(b))
        throw std::domain_error("relate_quadruples: inputs must be Descartes quadruples");
    if (ordering_sign(a) != 1 || ordering_sign(b) != 1)
        throw std::domain_error("relate_quadruples: inputs must be positively ordered");

    std::array<std::array<long long, 4>, 4> bm;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) bm[i][j] = b.cols[j][i];
    check_entry_bounds(bm);

    // Adjugate of B over the integers; B^-1 = adj / det with det = +8.
    auto cof3 = [&](int skip_r, int skip_c) -> long long {
        int rows[3], cols[3], nr = 0, nc = 0;
        for (int k = 0; k < 4; ++k) {
            if (k != skip_r) rows[nr++] = k;
            if (k != skip_c) cols[nc++] = k;
        }
        int128 d = 0;
        d += int128(bm[rows[0]][cols[0]]) * (int128(bm[rows[1]][cols[1]]) * bm[rows[2]][cols[2]] -
                                             int128(bm[rows[1]][cols[2]]) * bm[rows[2]][cols[1]]);
        d -= int128(bm[rows[0]][cols[1]]) * (int128(bm[rows[1]][cols[0]]) * bm[rows[2]][cols[2]] -
                                             int128(bm[rows[1]][cols[2]]) * bm[rows[2]][cols[0]]);
        d += int128(bm[rows[0]][cols[2]]) * (int128(bm[rows[1]][cols[0]]) * bm[rows[2]][cols[1]] -
                                             int128(bm[rows[1]][cols[1]]) * bm[rows[2]][cols[0]]);
        return static_cast<long long>(d);
    };

    long long det = 8;  // pinned by ordering_sign(b) == +1
    LorentzMatrix n;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            // (A adj(B))_{ij} / det, with adj(B)_{kj} = (-1)^{k+j} cof3(j, k)
            int128 s = 0;
            for (int k = 0; k < 4; ++k) {
                long long adj_kj = ((k + j) % 2 == 0 ? 1 : -1) * cof3(j, k);
                s += int128(a.cols[k][i]) * adj_kj;
            }
            if (s % det != 0)
                throw std::domain_error("relate_quadruples: A B^-1 is not integral");
            n(i, j) = static_cast<long long>(s / det);
        }

    if (!is_lorentz(n))
        throw std::logic_error("relate_quadruples: result is not proper orthochronous");
    if (lorentz_apply(n, b) != a)
        throw std::logic_error("relate_quadruples: N B != A");
    return n;
}

}  // namespace apollonian
