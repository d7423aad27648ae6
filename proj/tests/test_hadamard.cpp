#include <cmath>
#include <vector>

#include <doctest.h>

#include "cauchy/cauchy_builders.hpp"
#include "cauchy/definiteness.hpp"
#include "cauchy/hadamard.hpp"
#include "cauchy/oracle.hpp"
#include "support.hpp"

using namespace cauchy;
using testsupport::SignPattern;

namespace {

bool same_values(const SymmetricTensor& a, const SymmetricTensor& b) {
    if (a.canonical_size() != b.canonical_size()) return false;
    for (std::size_t pos = 0; pos < a.canonical_size(); ++pos) {
        if (a.value_at(pos) != b.value_at(pos)) return false;
    }
    return true;
}

// Regrouped products agree only up to rounding of the last multiply.
bool close_values(const SymmetricTensor& a, const SymmetricTensor& b) {
    if (a.canonical_size() != b.canonical_size()) return false;
    for (std::size_t pos = 0; pos < a.canonical_size(); ++pos) {
        const double va = a.value_at(pos);
        const double vb = b.value_at(pos);
        if (std::abs(va - vb) > 1e-15 * std::max(std::abs(va), 1.0)) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("entrywise product of the 2x2 example squares the entries") {
    const SymmetricTensor t = build_cauchy(GeneratingVector({1, 2}, 2));
    const SymmetricTensor p = hadamard(t, t);
    CHECK(p.value_at(0) == 0.25);
    CHECK(p.value_at(1) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    CHECK(p.value_at(2) == 0.0625);
}

TEST_CASE("the all-ones tensor is the identity factor") {
    // c = (1/m, ..., 1/m) makes every multiset sum 1, so every entry is 1.
    const SymmetricTensor ones = build_cauchy(GeneratingVector({0.5, 0.5}, 2));
    const SymmetricTensor t = build_cauchy(GeneratingVector({1, 2}, 2));
    CHECK(same_values(hadamard(t, ones), t));
}

TEST_CASE("product commutes bitwise, regroupings agree to rounding") {
    SplitMix64 rng(61);
    const GeneratingVector ca =
        testsupport::random_grid_vector(rng, 3, 4, SignPattern::Positive);
    const GeneratingVector cb =
        testsupport::random_grid_vector(rng, 3, 4, SignPattern::Positive);
    const GeneratingVector cc =
        testsupport::random_grid_vector(rng, 3, 4, SignPattern::Any);
    const SymmetricTensor a = build_cauchy(ca);
    const SymmetricTensor b = build_cauchy(cb);
    const SymmetricTensor c = build_cauchy(cc);

    CHECK(same_values(hadamard(a, b), hadamard(b, a)));
    CHECK(close_values(hadamard(hadamard(a, b), c), hadamard(a, hadamard(b, c))));

    const std::vector<SymmetricTensor> order1 = {a, b, c};
    const std::vector<SymmetricTensor> order2 = {b, a, c};
    CHECK(same_values(hadamard_chain(order1), hadamard_chain(order2)));

    const std::vector<SymmetricTensor> order3 = {c, a, b};
    CHECK(close_values(hadamard_chain(order1), hadamard_chain(order3)));
}

TEST_CASE("chain of one factor is the factor itself") {
    const SymmetricTensor t = build_cauchy(GeneratingVector({1, 2, 3}, 2));
    const std::vector<SymmetricTensor> single = {t};
    CHECK(same_values(hadamard_chain(single), t));
}

TEST_CASE("shape errors") {
    const SymmetricTensor a = build_cauchy(GeneratingVector({1, 2}, 2));
    const SymmetricTensor b = build_cauchy(GeneratingVector({1, 2, 3}, 2));
    const SymmetricTensor c = build_cauchy(GeneratingVector({1, 2}, 4));
    CHECK_THROWS_AS(hadamard(a, b), ShapeMismatch);
    CHECK_THROWS_AS(hadamard(a, c), ShapeMismatch);
    CHECK_THROWS_AS(hadamard_chain(std::vector<SymmetricTensor>{}), EmptyList);
}

TEST_CASE("products of positive factors stay positive semi-definite") {
    SplitMix64 rng(67);
    for (int trial = 0; trial < 6; ++trial) {
        const GeneratingVector ca =
            testsupport::random_grid_vector(rng, 3, 4, SignPattern::Positive);
        const GeneratingVector cb =
            testsupport::random_grid_vector(rng, 3, 4, SignPattern::Positive);
        const SymmetricTensor p =
            hadamard(build_cauchy(ca), build_cauchy(cb));
        const oracle::SphereMinResult smin = oracle::sphere_min(p, 12, 42);
        CHECK(smin.value >= -1e-8);

        const bool both_pd =
            classify(ca).classification == Definiteness::PD &&
            classify(cb).classification == Definiteness::PD;
        if (both_pd) CHECK(smin.value > 1e-10);
    }
}
