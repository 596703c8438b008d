#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "apollonian/circle.hpp"
#include "apollonian/explore.hpp"
#include "apollonian/minkowski.hpp"

namespace apollonian {

struct SuiteResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;

    bool ok() const { return failed == 0 && passed > 0; }
    void check(bool cond, const std::string& what) {
        if (cond) {
            ++passed;
        } else {
            ++failed;
            if (failures.size() < 16) failures.push_back(what);
        }
    }
};

// Deterministic generators for randomized identity tests.
namespace sample {

using Rng = std::mt19937_64;

GaussianInt small_gauss(Rng& rng, long long bound);

// Product of elementary matrices and unit diagonals: unit determinant by
// construction, entries kept small.
GaussMatrix2 unit_matrix(Rng& rng, int steps = 4);

// Zero-sum superbasis with all entries bounded in absolute value.
Superbasis superbasis(Rng& rng, long long entry_bound = 20);

HermitianForm hermitian_form(Rng& rng, long long bound = 9);

Circle circle(Rng& rng);

}  // namespace sample

// H2 and the reality lemma on random forms and superbases.
SuiteResult verify_hermitian(int superbases, int forms_per, std::uint64_t seed);

enum class PackingChoice { Strip, Coset, Both };

// Gram criterion, curvature Descartes relation, swap linear relation, and
// the mod (1+i) tangency congruence over palaces generated from the strip
// and/or the example coset at the given curvature bound.
SuiteResult verify_descartes(long long max_curvature,
                             PackingChoice from = PackingChoice::Both);

// Homomorphism, Lorentz invariants, unit-scaling invariance, the Moebius /
// Lorentz agreement square, and the pinned quarter-turn image.
SuiteResult verify_spinor(int samples, std::uint64_t seed);

// Curvature parity, centre parity against the PSL coset, and the
// co-curvature relation on random unit-determinant matrices.
SuiteResult verify_parity(int samples, std::uint64_t seed);

SuiteResult verify_lockstep(int depth);

// Half-primitivity and strong integrality of the strip and example coset
// packings.
SuiteResult verify_primitivity(long long max_curvature);

// relate_quadruples on positively ordered pairs sampled from exploration.
SuiteResult verify_relate(int pairs, std::uint64_t seed);

}  // namespace apollonian
