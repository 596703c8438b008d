#include "apollonian/lax.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace apollonian {

bool is_primitive(GaussVec2 v) {
    if (v.is_zero()) return false;
    return is_unit(gauss_gcd(v.x, v.y));
}

LaxVector lax_canonical(GaussVec2 v) {
    if (!is_primitive(v))
        throw std::domain_error("lax_canonical: vector is not primitive");
    GaussianInt lead = v.x.is_zero() ? v.y : v.x;
    GaussianInt t = canonical_unit(lead);
    return LaxVector{t * v};
}

bool is_basis(const LaxVector& a, const LaxVector& b) {
    return is_unit(mat_det({a.v, b.v}));
}

namespace {

// Units e2, e3 with a + e2*b + e3*c = 0, if they exist.  For a genuine
// superbasis the pair is unique: a and b are independent, so any two
// zero-sum triples with the same first vector coincide.
std::optional<std::pair<GaussianInt, GaussianInt>> zero_sum_units(GaussVec2 a, GaussVec2 b,
                                                                  GaussVec2 c) {
    for (GaussianInt e2 : gaussian_units())
        for (GaussianInt e3 : gaussian_units())
            if ((a + e2 * b + e3 * c).is_zero()) return std::make_pair(e2, e3);
    return std::nullopt;
}

}  // namespace

bool is_superbasis(const LaxVector& a, const LaxVector& b, const LaxVector& c) {
    if (!is_basis(a, b) || !is_basis(b, c) || !is_basis(a, c)) return false;
    return zero_sum_units(a.v, b.v, c.v).has_value();
}

Superbasis superbasis_zero_sum(const LaxVector& a, const LaxVector& b, const LaxVector& c) {
    if (!is_basis(a, b) || !is_basis(b, c) || !is_basis(a, c))
        throw std::domain_error("superbasis_zero_sum: vectors are not pairwise bases");
    auto units = zero_sum_units(a.v, b.v, c.v);
    if (!units)
        throw std::domain_error("superbasis_zero_sum: no zero-sum unit assignment");
    return Superbasis{a.v, units->first * b.v, units->second * c.v};
}

LaxLattice LaxLattice::from_basis(GaussVec2 u, GaussVec2 v) {
    if (!is_unit(mat_det({u, v})))
        throw std::domain_error("LaxLattice: basis determinant is not a unit");
    return LaxLattice{u, v};
}

bool lattice_equal(const LaxLattice& a, const LaxLattice& b) {
    // b = e * a * T with T in SL_2(Z)  <=>  e^-1 * a^-1 * b is a rational
    // integer matrix of determinant +1 for some unit e.
    GaussMatrix2 t = mat_mul(mat_inverse(a.basis_matrix()), b.basis_matrix());
    for (GaussianInt e : gaussian_units()) {
        GaussMatrix2 s = e * t;
        bool integral = s.c0.x.im == 0 && s.c0.y.im == 0 && s.c1.x.im == 0 && s.c1.y.im == 0;
        if (integral && mat_det(s) == GaussianInt{1, 0}) return true;
    }
    return false;
}

bool contains_lax(const LaxLattice& lattice, const LaxVector& x) {
    // x in L or ix in L, where L is the Z-span of (u, v): the coordinates
    // M^-1 * x must be rational integers.
    GaussMatrix2 inv = mat_inverse(lattice.basis_matrix());
    for (GaussVec2 cand : {x.v, times_i(x.v)}) {
        GaussVec2 coords = mat_apply(inv, cand);
        if (coords.x.im == 0 && coords.y.im == 0) return true;
    }
    return false;
}

std::array<LaxVector, 3> Chamber::wall_opposite(int k) const {
    std::array<LaxVector, 3> labels;
    int n = 0;
    for (const Edge& e : edges)
        if (e.a != k && e.b != k) labels[n++] = e.label;
    if (n != 3) throw std::logic_error("Chamber: malformed edge incidence");
    return labels;
}

const LaxVector& Chamber::edge_between(int i, int j) const {
    for (const Edge& e : edges)
        if ((e.a == i && e.b == j) || (e.a == j && e.b == i)) return e.label;
    throw std::domain_error("Chamber: no such edge");
}

namespace {

Chamber make_standard_chamber(const Superbasis& s, Handedness hand) {
    GaussVec2 u = s.u, v = s.v, w = s.w;
    GaussVec2 iu = times_i(u), iv = times_i(v), iw = times_i(w);

    Chamber ch;
    ch.handedness = hand;
    ch.vertices[0] = LaxLattice::from_basis(u, iv);
    ch.vertices[1] = LaxLattice::from_basis(v, iw);
    ch.vertices[2] = LaxLattice::from_basis(w, iu);
    if (hand == Handedness::Left) {
        ch.vertices[3] = LaxLattice::from_basis(w - iv, iu - v);
        ch.edges = {Chamber::Edge{0, 1, lax_canonical(v)},  Chamber::Edge{1, 2, lax_canonical(w)},
                    Chamber::Edge{0, 2, lax_canonical(u)},  Chamber::Edge{0, 3, lax_canonical(u + iv)},
                    Chamber::Edge{1, 3, lax_canonical(v + iw)}, Chamber::Edge{2, 3, lax_canonical(w + iu)}};
    } else {
        ch.vertices[3] = LaxLattice::from_basis(w + iv, iu + v);
        ch.edges = {Chamber::Edge{0, 1, lax_canonical(v)},  Chamber::Edge{1, 2, lax_canonical(w)},
                    Chamber::Edge{0, 2, lax_canonical(u)},  Chamber::Edge{0, 3, lax_canonical(u - iv)},
                    Chamber::Edge{1, 3, lax_canonical(v - iw)}, Chamber::Edge{2, 3, lax_canonical(w - iu)}};
    }
    return ch;
}

}  // namespace

std::pair<Chamber, Chamber> complete_wall(const Superbasis& s) {
    if (!(s.u + s.v + s.w).is_zero())
        throw std::domain_error("complete_wall: representatives do not sum to zero");
    if (!is_unit(mat_det({s.u, s.v})) || !is_unit(mat_det({s.v, s.w})) ||
        !is_unit(mat_det({s.u, s.w})))
        throw std::domain_error("complete_wall: not a superbasis");
    return {make_standard_chamber(s, Handedness::Left),
            make_standard_chamber(s, Handedness::Right)};
}

// ---- Court of a prince -------------------------------------------------
//
// Work in the coordinates of the lattice basis: titles are primitive
// integer pairs up to sign, topograph vertices are superbases of Z^2.

namespace {

struct Title {
    long long x, y;
    auto operator<=>(const Title&) const = default;
};

Title title_of(long long x, long long y) {
    if (y < 0 || (y == 0 && x < 0)) { x = -x; y = -y; }
    return {x, y};
}

long long title_det(Title a, Title b) { return a.x * b.y - a.y * b.x; }

using TopographNode = std::array<Title, 3>;

TopographNode node_of(Title a, Title b, Title c) {
    TopographNode n{a, b, c};
    std::sort(n.begin(), n.end());
    return n;
}

}  // namespace

CourtReport court_check(const LaxLattice& lattice, int radius,
                        const std::vector<QuadraticForm>& forms_in) {
    (void)lattice;  // checks are invariant under the isomorphism L ~ Z^2
    if (radius < 0 || radius > 4)
        throw std::domain_error("court_check: radius must be in [0, 4]");

    std::vector<QuadraticForm> forms = forms_in;
    if (forms.empty())
        forms = {{1, 0, 1}, {1, 0, -1}, {2, 1, 3}, {0, 1, 0}, {-3, 2, 5}};

    CourtReport report;
    auto fail = [&](bool& flag, std::string msg) {
        flag = false;
        report.failures.push_back(std::move(msg));
    };

    // BFS over topograph vertices.  Expanding the superbasis {a, b, c}
    // across the basis {a, b} replaces c: the two completions of {a, b}
    // are a+b and a-b (up to sign), and c is one of them.
    TopographNode root = node_of(title_of(1, 0), title_of(0, 1), title_of(1, 1));
    std::map<TopographNode, int> depth{{root, 0}};
    std::map<TopographNode, TopographNode> parent;
    std::vector<TopographNode> frontier{root};

    for (int d = 0; d < radius; ++d) {
        std::vector<TopographNode> next;
        for (const TopographNode& node : frontier) {
            int neighbours = 0;
            for (int skip = 0; skip < 3; ++skip) {
                Title a = node[(skip + 1) % 3], b = node[(skip + 2) % 3], c = node[skip];
                Title sum = title_of(a.x + b.x, a.y + b.y);
                Title diff = title_of(a.x - b.x, a.y - b.y);
                Title other = (c == sum) ? diff : sum;
                if (c != sum && c != diff) {
                    fail(report.dual_tree_valence3,
                         "superbasis third element is neither a+b nor a-b");
                    continue;
                }
                TopographNode nb = node_of(a, b, other);
                ++neighbours;
                auto it = depth.find(nb);
                if (it == depth.end()) {
                    depth[nb] = d + 1;
                    parent[nb] = node;
                    next.push_back(nb);
                } else if (!(parent.count(node) && parent[node] == nb)) {
                    fail(report.dual_tree_valence3, "cycle in the dual graph");
                }
            }
            if (neighbours != 3)
                fail(report.dual_tree_valence3, "dual graph vertex without valence 3");
        }
        frontier = std::move(next);
    }

    std::set<Title> titles;
    for (const auto& [node, d] : depth)
        for (const Title& t : node) titles.insert(t);
    report.title_count = static_cast<int>(titles.size());
    report.superbasis_count = static_cast<int>(depth.size());
    for (const Title& t : titles) report.titles.emplace_back(t.x, t.y);

    // (a) pairs sharing an enumerated wall form Z-bases, and every basis
    // pair has two legitimate superbasis completions.
    for (const auto& [node, d] : depth)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (std::llabs(title_det(node[i], node[j])) != 1)
                    fail(report.joined_iff_basis, "wall pair is not a Z-basis");
    for (const Title& s : titles)
        for (const Title& t : titles) {
            if (!(s < t) || std::llabs(title_det(s, t)) != 1) continue;
            Title sum = title_of(s.x + t.x, s.y + t.y);
            Title diff = title_of(s.x - t.x, s.y - t.y);
            for (Title comp : {sum, diff})
                if (std::llabs(title_det(s, comp)) != 1 || std::llabs(title_det(t, comp)) != 1)
                    fail(report.joined_iff_basis, "basis pair with invalid completion");
        }

    // (c) parallelogram law f(a+b) + f(a-b) = 2 f(a) + 2 f(b) around every
    // enumerated edge.
    for (const auto& [node, d] : depth)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                Title a = node[i], b = node[j];
                for (const QuadraticForm& f : forms) {
                    long long lhs = f.eval(a.x + b.x, a.y + b.y) + f.eval(a.x - b.x, a.y - b.y);
                    long long rhs = 2 * f.eval(a.x, a.y) + 2 * f.eval(b.x, b.y);
                    if (lhs != rhs) fail(report.parallelogram_law, "parallelogram law fails");
                }
            }

    return report;
}

}  // namespace apollonian
