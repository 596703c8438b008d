#include "apollonian/explore.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <unordered_set>

namespace apollonian {

namespace {

GaussianInt gi(long long re, long long im) { return {re, im}; }

using QuadKey = std::array<PedoeVector, 4>;

QuadKey key_of(const Quadruple& q) {
    QuadKey k = q.cols;
    std::sort(k.begin(), k.end());
    return k;
}

Quadruple sorted_quadruple(const Quadruple& q) { return Quadruple{key_of(q)}; }

struct QuadKeyHash {
    size_t operator()(const QuadKey& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (const PedoeVector& v : k)
            for (int i = 0; i < 4; ++i) {
                h ^= static_cast<std::uint64_t>(v[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
                h *= 1099511628211ull;
            }
        return h;
    }
};

// Swap without the public Gram re-verification; BFS feeds it only
// quadruples already known to be Descartes.
Quadruple swap_unchecked(const Quadruple& q, int i) {
    PedoeVector sum{};
    for (int j = 0; j < 4; ++j)
        if (j != i) sum = sum + q.cols[j];
    Quadruple out = q;
    out.cols[i] = 2 * sum - q.cols[i];
    return out;
}

// A quadruple stays in the frontier while its smallest circle (largest
// |b|) is within the curvature margin and its disk lies within one
// diameter of the window, i.e. within 3r of it.
bool quad_retained(const Quadruple& q, const ExplorationConfig& cfg) {
    long long maxb = 0;
    for (const PedoeVector& v : q.cols) maxb = std::max(maxb, std::llabs(v.b));
    if (maxb > cfg.margin * cfg.max_curvature) return false;
    if (maxb == 0) return true;
    for (const PedoeVector& v : q.cols) {
        if (std::llabs(v.b) != maxb || v.b <= 0) continue;
        Rational cx(v.r, v.b), cy(v.m, v.b);
        if (dist2_point_rect(cx, cy, cfg.window) <= Rational(9, v.b * v.b)) return true;
    }
    return false;
}

bool circle_kept(const Circle& c, const ExplorationConfig& cfg) {
    return std::llabs(c.b) <= cfg.max_curvature && disk_meets_window(c, cfg.window);
}

PalaceGraph build_graph(std::map<PedoeVector, Circle> kept) {
    PalaceGraph g;
    g.vertices = std::move(kept);

    std::vector<PedoeVector> keys;
    std::vector<Circle> circles;
    keys.reserve(g.vertices.size());
    for (const auto& [k, c] : g.vertices) {
        keys.push_back(k);
        circles.push_back(c);
    }
    int n = static_cast<int>(keys.size());

    std::vector<std::set<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (externally_tangent(circles[i], circles[j])) {
                adj[i].insert(j);
                adj[j].insert(i);
                g.edges.push_back({keys[i], keys[j],
                                   lax_from_projective(tangency_point(circles[i], circles[j]))});
            }
    std::sort(g.edges.begin(), g.edges.end());

    // Chambers are the 4-cliques of the tangency graph: four mutually
    // externally tangent unit-norm vectors have Gram matrix R.
    for (int i = 0; i < n; ++i)
        for (int j : adj[i]) {
            if (j <= i) continue;
            std::vector<int> common;
            for (int k : adj[i])
                if (k > j && adj[j].count(k)) common.push_back(k);
            for (size_t a = 0; a < common.size(); ++a)
                for (size_t b = a + 1; b < common.size(); ++b) {
                    int k = common[a], l = common[b];
                    if (!adj[k].count(l)) continue;
                    PalaceGraph::ChamberKeys ch;
                    ch.keys = {keys[i], keys[j], keys[k], keys[l]};
                    ch.sign = ordering_sign(Quadruple{ch.keys});
                    g.chambers.push_back(ch);
                }
        }
    std::sort(g.chambers.begin(), g.chambers.end());
    return g;
}

PalaceGraph palace_from_swaps(const Quadruple& seed, const ExplorationConfig& cfg) {
    if (!is_descartes(seed)) throw std::domain_error("explore_palace: seed is not Descartes");
    Quadruple start = sorted_quadruple(seed);

    std::unordered_set<QuadKey, QuadKeyHash> visited{start.cols};
    std::vector<Quadruple> frontier{start};
    std::vector<Quadruple> retained{start};

    for (int depth = 0; !frontier.empty() && (cfg.max_depth == 0 || depth < cfg.max_depth);
         ++depth) {
        std::vector<Quadruple> next;
        for (const Quadruple& q : frontier)
            for (int i = 0; i < 4; ++i) {
                Quadruple q2 = sorted_quadruple(swap_unchecked(q, i));
                if (visited.count(q2.cols) || !quad_retained(q2, cfg)) continue;
                visited.insert(q2.cols);
                retained.push_back(q2);
                next.push_back(q2);
            }
        frontier = std::move(next);
    }

    std::map<PedoeVector, Circle> kept;
    for (const Quadruple& q : retained)
        for (const PedoeVector& v : q.cols) {
            Circle c = circle_from_pedoe(v);
            if (circle_kept(c, cfg)) kept.emplace(v, c);
        }

    PalaceGraph g = build_graph(std::move(kept));
    g.generated_quadruples = std::move(retained);
    return g;
}

// Right Cayley walk on the strip group: states are group elements gamma
// carried as Lorentz matrices, identified with the positively ordered
// quadruples gamma . base (the action is simply transitive).  Multiplying
// on the right by the chamber swap A crosses a wall of the current
// quadruple, while the rotations B and C reorder it in place, so the walk
// visits exactly the quadruples of the packing with no detours, and the
// quadruple-level pruning matches the swap route's.
PalaceGraph orbit_packing(const GaussMatrix2& coset, const ExplorationConfig& cfg) {
    if (!has_unit_det(coset))
        throw std::domain_error("coset_packing: determinant is not a unit");

    GaussMatrix2 a = GaussMatrix2::from_rows(gi(0, 0), gi(-1, 0), gi(1, 0), gi(0, 0));
    GaussMatrix2 b = gamma_gen_b();
    GaussMatrix2 c = GaussMatrix2::from_rows(gi(1, 0), gi(-1, 0), gi(1, 0), gi(0, 0));
    std::vector<LorentzMatrix> gens;
    for (const GaussMatrix2& g : {a, b, c}) {
        gens.push_back(spinor(g));
        gens.push_back(spinor(mat_inverse(g)));
    }

    const Quadruple base = base_quadruple();
    LorentzMatrix start = spinor(coset);
    Quadruple start_quad = lorentz_apply(start, base);

    std::unordered_set<QuadKey, QuadKeyHash> visited{start_quad.cols};  // ordered keys
    std::vector<LorentzMatrix> frontier{start};
    std::map<PedoeVector, Circle> circles;
    auto note_circles = [&](const Quadruple& q) {
        for (const PedoeVector& v : q.cols) circles.emplace(v, circle_from_pedoe(v));
    };
    note_circles(start_quad);

    while (!frontier.empty()) {
        std::vector<LorentzMatrix> next;
        for (const LorentzMatrix& n : frontier)
            for (const LorentzMatrix& g : gens) {
                LorentzMatrix n2 = lorentz_mul(n, g);
                Quadruple q2 = lorentz_apply(n2, base);
                if (visited.count(q2.cols) || !quad_retained(q2, cfg)) continue;
                visited.insert(q2.cols);
                note_circles(q2);
                next.push_back(n2);
            }
        frontier = std::move(next);
    }

    std::map<PedoeVector, Circle> kept;
    for (const auto& [v, circ] : circles)
        if (circle_kept(circ, cfg)) kept.emplace(v, circ);
    return build_graph(std::move(kept));
}

QuadKey chamber_key(const Chamber& ch) {
    QuadKey k;
    for (int i = 0; i < 4; ++i) k[i] = pedoe(circle_from_lattice(ch.vertices[i]));
    std::sort(k.begin(), k.end());
    return k;
}

}  // namespace

Quadruple base_quadruple() {
    return Quadruple{{PedoeVector{0, 0, 0, -1}, PedoeVector{0, 2, 0, 1}, PedoeVector{2, 2, 2, 1},
                      PedoeVector{2, 0, 0, 1}}};
}

Chamber base_chamber() {
    LaxVector u = lax_canonical({gi(1, 0), gi(0, 0)});
    LaxVector v = lax_canonical({gi(0, 0), gi(0, -1)});
    LaxVector w = lax_canonical({gi(-1, 0), gi(0, 1)});
    return complete_wall(superbasis_zero_sum(u, v, w)).first;
}

GaussMatrix2 gamma_gen_d() {
    return GaussMatrix2::from_rows(gi(1, 0), gi(0, 0), gi(1, 0), gi(1, 0));
}

GaussMatrix2 gamma_gen_b() {
    return GaussMatrix2::from_rows(gi(0, 0), gi(0, 1), gi(0, 1), gi(1, 0));
}

GaussMatrix2 example_coset_matrix() {
    return GaussMatrix2::from_rows(gi(0, 1), gi(0, 0), gi(1, 0), gi(0, 1));
}

std::array<GaussMatrix2, 4> pgl2_generators() {
    return {GaussMatrix2::from_rows(gi(1, 0), gi(1, 0), gi(0, 0), gi(1, 0)),
            GaussMatrix2::from_rows(gi(1, 0), gi(0, 1), gi(0, 0), gi(1, 0)),
            GaussMatrix2::from_rows(gi(0, 0), gi(-1, 0), gi(1, 0), gi(0, 0)),
            GaussMatrix2::from_rows(gi(0, 1), gi(0, 0), gi(0, 0), gi(1, 0))};
}

bool gamma_relation_holds() {
    GaussMatrix2 a = GaussMatrix2::from_rows(gi(0, 0), gi(-1, 0), gi(1, 0), gi(0, 0));
    GaussMatrix2 b = gamma_gen_b();
    GaussMatrix2 c = GaussMatrix2::from_rows(gi(1, 0), gi(-1, 0), gi(1, 0), gi(0, 0));
    GaussMatrix2 d = mat_mul(mat_inverse(c), a);
    if (d != gamma_gen_d()) return false;

    GaussMatrix2 binv = mat_inverse(b), dinv = mat_inverse(d);
    GaussMatrix2 word = mat_mul(binv, d);
    word = mat_mul(word, b);
    word = mat_mul(word, dinv);
    word = mat_mul(word, binv);
    word = mat_mul(word, d);
    word = mat_mul(word, b);
    for (GaussianInt e : gaussian_units())
        if (e * word == a) return true;
    return false;
}

bool graphs_agree(const PalaceGraph& a, const PalaceGraph& b, std::string* why) {
    auto report = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (a.vertices.size() != b.vertices.size())
        return report("vertex counts differ: " + std::to_string(a.vertices.size()) + " vs " +
                      std::to_string(b.vertices.size()));
    for (const auto& [k, c] : a.vertices) {
        auto it = b.vertices.find(k);
        if (it == b.vertices.end() || !(it->second == c))
            return report("vertex sets differ at (" + std::to_string(k.b) + "," +
                          std::to_string(k.bp) + "," + std::to_string(k.r) + "," +
                          std::to_string(k.m) + ")");
    }
    if (a.edges != b.edges) return report("edge lists differ");
    if (a.chambers != b.chambers) return report("chamber lists differ");
    return true;
}

PalaceGraph explore_palace(const Quadruple& seed, const ExplorationConfig& cfg) {
    return palace_from_swaps(seed, cfg);
}

PalaceGraph strip_packing(const ExplorationConfig& cfg) {
    return orbit_packing(GaussMatrix2::identity(), cfg);
}

PalaceGraph coset_packing(const GaussMatrix2& n, const ExplorationConfig& cfg) {
    return orbit_packing(n, cfg);
}

KingdomExploration explore_kingdom(const Chamber& seed, int max_depth) {
    KingdomExploration out;
    std::set<QuadKey> seen{chamber_key(seed)};
    std::vector<Chamber> frontier{seed};
    out.chambers.push_back(seed);
    out.layer_offsets = {0, 1};

    for (int depth = 0; depth < max_depth && !frontier.empty(); ++depth) {
        std::vector<Chamber> next;
        for (const Chamber& ch : frontier) {
            QuadKey cur = chamber_key(ch);
            for (int k = 0; k < 4; ++k) {
                auto labels = ch.wall_opposite(k);
                Superbasis s = superbasis_zero_sum(labels[0], labels[1], labels[2]);
                auto [left, right] = complete_wall(s);
                QuadKey lk = chamber_key(left), rk = chamber_key(right);
                if ((lk == cur) == (rk == cur))
                    throw std::logic_error(
                        "explore_kingdom: completed wall does not flank the current chamber");
                const Chamber& nb = (lk == cur) ? right : left;
                QuadKey nk = (lk == cur) ? rk : lk;
                if (seen.insert(nk).second) {
                    out.chambers.push_back(nb);
                    next.push_back(nb);
                }
            }
        }
        frontier = std::move(next);
        out.layer_offsets.push_back(static_cast<int>(out.chambers.size()));
    }
    return out;
}

LockstepReport lockstep_verify(int depth) {
    if (depth < 0 || depth > 8)
        throw std::domain_error("lockstep_verify: depth must be in [0, 8]");

    LockstepReport rep;
    rep.depth = depth;
    auto mismatch = [&](std::string msg) { rep.mismatches.push_back(std::move(msg)); };

    KingdomExploration kingdom = explore_kingdom(base_chamber(), depth);

    // Swap-side breadth-first closure, depth-limited, no pruning.
    std::map<QuadKey, int> swap_depth{{key_of(base_quadruple()), 0}};
    std::vector<Quadruple> frontier{sorted_quadruple(base_quadruple())};
    for (int d = 0; d < depth; ++d) {
        std::vector<Quadruple> next;
        for (const Quadruple& q : frontier)
            for (int i = 0; i < 4; ++i) {
                Quadruple q2 = sorted_quadruple(swap_unchecked(q, i));
                if (swap_depth.emplace(q2.cols, d + 1).second) next.push_back(q2);
            }
        frontier = std::move(next);
    }

    // Layer-by-layer agreement of chamber keys with swap-side depths.
    for (size_t d = 0; d + 1 < kingdom.layer_offsets.size(); ++d) {
        int lo = kingdom.layer_offsets[d], hi = kingdom.layer_offsets[d + 1];
        rep.layer_sizes.push_back(hi - lo);
        for (int idx = lo; idx < hi; ++idx) {
            QuadKey k = chamber_key(kingdom.chambers[idx]);
            auto it = swap_depth.find(k);
            if (it == swap_depth.end())
                mismatch("chamber at depth " + std::to_string(d) + " missing from swap closure");
            else if (it->second != static_cast<int>(d))
                mismatch("chamber depth disagrees: kingdom " + std::to_string(d) + ", swaps " +
                         std::to_string(it->second));
        }
    }
    if (swap_depth.size() != kingdom.chambers.size())
        mismatch("chamber counts differ: kingdom " + std::to_string(kingdom.chambers.size()) +
                 ", swaps " + std::to_string(swap_depth.size()));
    rep.chamber_count = static_cast<int>(kingdom.chambers.size());

    // Per-chamber cross-checks and the lattice/circle bijection.
    std::map<PedoeVector, std::vector<LaxLattice>> lattices_by_circle;
    for (const Chamber& ch : kingdom.chambers) {
        std::array<Circle, 4> circles;
        Quadruple q;
        for (int i = 0; i < 4; ++i) {
            circles[i] = circle_from_lattice(ch.vertices[i]);
            q.cols[i] = pedoe(circles[i]);
            lattices_by_circle[q.cols[i]].push_back(ch.vertices[i]);
        }
        if (!is_descartes(q)) mismatch("chamber circles do not form a Descartes quadruple");
        for (const Chamber::Edge& e : ch.edges) {
            ++rep.edge_checks;
            ProjectivePoint tp = tangency_point(circles[e.a], circles[e.b]);
            if (!(lax_from_projective(tp) == e.label))
                mismatch("edge label is not the tangency lax vector");
            if (!contains_lax(ch.vertices[e.a], e.label) ||
                !contains_lax(ch.vertices[e.b], e.label))
                mismatch("vertex lattice does not contain an adjacent edge label");
        }
        for (int k = 0; k < 4; ++k) {
            auto wall = ch.wall_opposite(k);
            if (!is_superbasis(wall[0], wall[1], wall[2]))
                mismatch("chamber wall is not a superbasis");
        }
    }
    rep.circle_count = static_cast<int>(lattices_by_circle.size());

    for (const auto& [key, lats] : lattices_by_circle)
        for (size_t i = 1; i < lats.size(); ++i)
            if (!lattice_equal(lats[0], lats[i]))
                mismatch("distinct lattices share a circle key");
    // Neighbouring distinct keys must not be equal as lattices.
    for (auto it = lattices_by_circle.begin(); it != lattices_by_circle.end(); ++it) {
        auto nx = std::next(it);
        if (nx == lattices_by_circle.end()) break;
        if (lattice_equal(it->second[0], nx->second[0]))
            mismatch("distinct circle keys with equal lattices");
    }

    return rep;
}

std::vector<Circle> enumerate_superpacking(const ExplorationConfig& cfg) {
    std::vector<LorentzMatrix> gens;
    for (const GaussMatrix2& g : pgl2_generators()) {
        gens.push_back(spinor(g));
        gens.push_back(spinor(mat_inverse(g)));
    }

    Quadruple start = sorted_quadruple(base_quadruple());
    std::unordered_set<QuadKey, QuadKeyHash> visited{start.cols};
    std::vector<Quadruple> frontier{start};
    std::set<PedoeVector> circles_seen;

    auto note_circles = [&](const Quadruple& q) {
        for (const PedoeVector& v : q.cols) circles_seen.insert(v);
    };
    note_circles(start);

    while (!frontier.empty()) {
        std::vector<Quadruple> next;
        auto offer = [&](Quadruple q2) {
            q2 = sorted_quadruple(q2);
            if (visited.count(q2.cols) || !quad_retained(q2, cfg)) return;
            visited.insert(q2.cols);
            note_circles(q2);
            next.push_back(q2);
        };
        for (const Quadruple& q : frontier) {
            for (int i = 0; i < 4; ++i) offer(swap_unchecked(q, i));
            for (const LorentzMatrix& n : gens) offer(lorentz_apply(n, q));
        }
        frontier = std::move(next);
    }

    std::vector<Circle> out;
    for (const PedoeVector& v : circles_seen) {
        if (v.b <= 0 || v.b >= cfg.max_curvature) continue;
        Circle c = circle_from_pedoe(v);
        if (curve_meets_window(c, cfg.window)) out.push_back(c);
    }
    return out;
}

HalfPrimitivityReport half_primitive_check(const std::vector<Circle>& circles) {
    if (circles.empty())
        throw std::domain_error("half_primitive_check: empty circle list");
    HalfPrimitivityReport rep;
    for (const Circle& c : circles) {
        if (c.b % 2 != 0) rep.curvatures_even = false;
        long long half = std::llabs(c.b) / 2;
        rep.half_curvature_gcd = std::gcd(rep.half_curvature_gcd, half);
    }
    return rep;
}

}  // namespace apollonian
