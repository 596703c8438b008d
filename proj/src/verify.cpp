#include "apollonian/verify.hpp"

#include <algorithm>
#include <cstdlib>

namespace apollonian {

namespace sample {

GaussianInt small_gauss(Rng& rng, long long bound) {
    std::uniform_int_distribution<long long> d(-bound, bound);
    return {d(rng), d(rng)};
}

GaussMatrix2 unit_matrix(Rng& rng, int steps) {
    std::uniform_int_distribution<int> kind(0, 3);
    GaussMatrix2 m = GaussMatrix2::identity();
    for (int s = 0; s < steps; ++s) {
        GaussianInt x = small_gauss(rng, 2);
        GaussMatrix2 e;
        switch (kind(rng)) {
            case 0: e = GaussMatrix2::from_rows({1, 0}, x, {0, 0}, {1, 0}); break;
            case 1: e = GaussMatrix2::from_rows({1, 0}, {0, 0}, x, {1, 0}); break;
            case 2: e = GaussMatrix2::from_rows({0, 0}, {-1, 0}, {1, 0}, {0, 0}); break;
            default: e = GaussMatrix2::from_rows({0, 1}, {0, 0}, {0, 0}, {1, 0}); break;
        }
        m = mat_mul(m, e);
    }
    return m;
}

Superbasis superbasis(Rng& rng, long long entry_bound) {
    for (;;) {
        GaussMatrix2 m = unit_matrix(rng, 3);
        GaussVec2 u = m.c0, v = m.c1, w = -(u + v);
        long long big = 0;
        for (GaussianInt g : {u.x, u.y, v.x, v.y, w.x, w.y})
            big = std::max({big, std::llabs(g.re), std::llabs(g.im)});
        if (big <= entry_bound) return Superbasis{u, v, w};
    }
}

HermitianForm hermitian_form(Rng& rng, long long bound) {
    std::uniform_int_distribution<long long> d(-bound, bound);
    return HermitianForm{d(rng), d(rng), {d(rng), d(rng)}};
}

Circle circle(Rng& rng) { return circle_from_matrix(unit_matrix(rng)); }

}  // namespace sample

SuiteResult verify_hermitian(int superbases, int forms_per, std::uint64_t seed) {
    SuiteResult r;
    r.name = "hermitian";
    sample::Rng rng(seed);
    for (int i = 0; i < superbases; ++i) {
        Superbasis s = sample::superbasis(rng, 20);
        for (int j = 0; j < forms_per; ++j) {
            HermitianForm h = sample::hermitian_form(rng, 9);
            r.check(hermitian_descartes_check(h, s), "H2 identity failed");
            r.check(hermitian_lemma_quantity(h, s).im == 0, "lemma quantity not real");
        }
    }
    return r;
}

namespace {

// z1 = z2 != 0 mod (1+i): both residues are determined by re+im mod 2.
bool tangency_congruence_holds(const Circle& a, const Circle& b) {
    long long ra = (a.z.re + a.z.im) & 1, rb = (b.z.re + b.z.im) & 1;
    return ra == 1 && rb == 1;
}

std::vector<PalaceGraph> default_packings(long long max_curvature,
                                          PackingChoice from = PackingChoice::Both) {
    ExplorationConfig cfg;
    cfg.max_curvature = max_curvature;
    std::vector<PalaceGraph> out;
    if (from != PackingChoice::Coset) out.push_back(explore_palace(base_quadruple(), cfg));
    if (from != PackingChoice::Strip) {
        Quadruple coset_seed = lorentz_apply(spinor(example_coset_matrix()), base_quadruple());
        out.push_back(explore_palace(coset_seed, cfg));
    }
    return out;
}

}  // namespace

SuiteResult verify_descartes(long long max_curvature, PackingChoice from) {
    SuiteResult r;
    r.name = "descartes";
    for (const PalaceGraph& g : default_packings(max_curvature, from)) {
        for (const Quadruple& q : g.generated_quadruples) {
            r.check(is_descartes(q), "generated quadruple fails the Gram criterion");
            r.check(descartes_quadratic_holds(q.cols[0].b, q.cols[1].b, q.cols[2].b, q.cols[3].b),
                    "curvature Descartes relation fails");
            for (int i = 0; i < 4; ++i) {
                Quadruple s = swap_at(q, i);
                long long expect = descartes_linear_completion(
                    q.cols[(i + 1) % 4].b, q.cols[(i + 2) % 4].b, q.cols[(i + 3) % 4].b,
                    q.cols[i].b);
                r.check(s.cols[i].b == expect, "swap violates the linear Descartes relation");
            }
        }
        for (const PalaceGraph::LabelledEdge& e : g.edges)
            r.check(tangency_congruence_holds(g.vertices.at(e.a), g.vertices.at(e.b)),
                    "tangent pair violates the mod (1+i) congruence");
    }
    return r;
}

SuiteResult verify_spinor(int samples, std::uint64_t seed) {
    SuiteResult r;
    r.name = "spinor";
    sample::Rng rng(seed);

    // Pinned image of the quarter turn z -> iz; acting on column vectors,
    // the transpose is the same map written as a right action.
    LorentzMatrix quarter;
    quarter.a = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}};
    GaussMatrix2 iz = GaussMatrix2::from_rows({0, 1}, {0, 0}, {0, 0}, {1, 0});
    r.check(spinor(iz) == quarter, "quarter-turn image differs from the pinned matrix");

    for (int i = 0; i < samples; ++i) {
        GaussMatrix2 m1 = sample::unit_matrix(rng), m2 = sample::unit_matrix(rng);
        r.check(spinor(mat_mul(m1, m2)) == lorentz_mul(spinor(m1), spinor(m2)),
                "spinor is not multiplicative");
        LorentzMatrix n = spinor(m1);
        r.check(is_lorentz(n), "spinor image violates the Lorentz invariants");
        for (GaussianInt u : gaussian_units())
            r.check(spinor(u * m1) == n, "spinor depends on the unit scaling");

        GaussMatrix2 a = sample::unit_matrix(rng);
        Circle c = circle_from_matrix(a);
        r.check(pedoe(circle_from_matrix(mat_mul(m1, a))) == lorentz_apply(n, pedoe(c)),
                "Moebius and Lorentz actions disagree");
    }
    return r;
}

SuiteResult verify_parity(int samples, std::uint64_t seed) {
    SuiteResult r;
    r.name = "parity";
    sample::Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        GaussMatrix2 m = sample::unit_matrix(rng);
        Circle c = circle_from_matrix(m);
        r.check(c.b % 2 == 0 && c.bp % 2 == 0, "curvature or co-curvature is odd");
        r.check((c.z.re % 2 == 0) != (c.z.im % 2 == 0), "curvature-centre parity is not mixed");
        r.check(c.bp * c.b == norm(c.z) - 1, "co-curvature relation fails");
        r.check(parity_class(c) == coset_class(m), "centre parity disagrees with the coset");
    }
    return r;
}

SuiteResult verify_lockstep(int depth) {
    SuiteResult r;
    r.name = "lockstep";
    LockstepReport rep = lockstep_verify(depth);
    r.passed = rep.chamber_count + rep.edge_checks;
    r.failed = static_cast<int>(rep.mismatches.size());
    r.failures = rep.mismatches;
    if (r.failures.size() > 16) r.failures.resize(16);
    return r;
}

SuiteResult verify_primitivity(long long max_curvature) {
    SuiteResult r;
    r.name = "primitivity";
    for (const PalaceGraph& g : default_packings(max_curvature)) {
        std::vector<Circle> circles;
        for (const auto& [k, c] : g.vertices) circles.push_back(c);
        HalfPrimitivityReport rep = half_primitive_check(circles);
        r.check(rep.curvatures_even, "odd curvature in packing");
        r.check(rep.half_curvature_gcd == 1, "half-curvature gcd is not 1");
        r.check(rep.centres_integral, "curvature-centre is not a Gaussian integer");
    }
    return r;
}

SuiteResult verify_relate(int pairs, std::uint64_t seed) {
    SuiteResult r;
    r.name = "relate";
    ExplorationConfig cfg;
    cfg.max_curvature = 30;
    std::vector<Quadruple> pool;
    for (const PalaceGraph& g : default_packings(cfg.max_curvature))
        for (const Quadruple& q : g.generated_quadruples) pool.push_back(q);
    if (pool.size() < 2) {
        r.check(false, "not enough quadruples to sample");
        return r;
    }

    auto positively_ordered = [](Quadruple q) {
        if (ordering_sign(q) < 0) std::swap(q.cols[0], q.cols[1]);
        return q;
    };

    sample::Rng rng(seed);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < pairs; ++i) {
        Quadruple a = positively_ordered(pool[pick(rng)]);
        Quadruple b = positively_ordered(pool[pick(rng)]);
        LorentzMatrix n = relate_quadruples(a, b);
        r.check(is_lorentz(n), "relating matrix is not proper orthochronous");
        r.check(lorentz_apply(n, b) == a, "relating matrix does not map B to A");
        if (a == b) r.check(n == LorentzMatrix::identity(), "relate(A, A) != identity");
    }
    return r;
}

}  // namespace apollonian
