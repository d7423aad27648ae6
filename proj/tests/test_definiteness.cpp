#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "cauchy/cauchy_builders.hpp"
#include "cauchy/definiteness.hpp"
#include "cauchy/oracle.hpp"
#include "support.hpp"

using namespace cauchy;
using testsupport::SignPattern;

TEST_CASE("classification table") {
    CHECK(classify(GeneratingVector({1, 2, 3}, 4)).classification ==
          Definiteness::PD);
    CHECK(classify(GeneratingVector({1, 1, 1}, 4)).classification ==
          Definiteness::PSD_NOT_PD);
    CHECK(classify(GeneratingVector({-1, -2}, 2)).classification ==
          Definiteness::ND);
    CHECK(classify(GeneratingVector({-1, -1}, 2)).classification ==
          Definiteness::NSD_NOT_ND);
    CHECK(classify(GeneratingVector({1, -2}, 4)).classification ==
          Definiteness::NOT_PSD_NOT_NSD);
    CHECK(classify(GeneratingVector({1, 2, 3}, 3)).classification ==
          Definiteness::ODD_ORDER_NA);
}

TEST_CASE("duplicate pairs are enumerated") {
    const DefinitenessReport report = classify(GeneratingVector({1, 1, 1}, 4));
    const std::vector<std::pair<int, int>> expected = {{0, 1}, {0, 2}, {1, 2}};
    CHECK(report.duplicate_pairs == expected);
    CHECK_FALSE(report.witness.empty());
}

TEST_CASE("distinctness tolerance is a knob, default exact") {
    const GeneratingVector c({1.0, 1.0 + 1e-12}, 2);
    CHECK(classify(c).classification == Definiteness::PD);
    CHECK(classify(c, 1e-9).classification == Definiteness::PSD_NOT_PD);
}

TEST_CASE("row sums for small hand-checked cases") {
    const RowSumProfile p12 = row_sum_profile(GeneratingVector({1, 2}, 2));
    CHECK(p12.row_sums[0] == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
    CHECK(p12.row_sums[1] == doctest::Approx(7.0 / 12.0).epsilon(1e-15));
    CHECK(p12.max_row_sum == p12.row_sums[0]);
    CHECK(p12.min_row_sum == p12.row_sums[1]);
    CHECK(p12.argmax_row == 0);
    CHECK(p12.argmin_row == 1);

    const RowSumProfile p123 = row_sum_profile(GeneratingVector({1, 2, 3}, 2));
    CHECK(p123.row_sums[0] == doctest::Approx(13.0 / 12.0).epsilon(1e-15));
    CHECK(p123.row_sums[1] == doctest::Approx(47.0 / 60.0).epsilon(1e-15));
    CHECK(p123.row_sums[2] == doctest::Approx(37.0 / 60.0).epsilon(1e-15));
}

TEST_CASE("uniform entries give equal row sums n^{m-1}/(m a)") {
    const RowSumProfile p = row_sum_profile(GeneratingVector({2, 2, 2}, 3));
    for (double r : p.row_sums) {
        CHECK(r == doctest::Approx(9.0 / 6.0).epsilon(1e-14));
    }
}

TEST_CASE("row sums respect the term budget") {
    const GeneratingVector c({1, 2, 3, 4}, 4);
    CHECK_THROWS_AS(row_sum_profile(c, 10.0), BudgetExceeded);
    CHECK_NOTHROW(row_sum_profile(c, 1e8));
}

TEST_CASE("pd_via_row_sums matches the hand examples") {
    CHECK(pd_via_row_sums(GeneratingVector({1, 2}, 2)));
    CHECK_FALSE(pd_via_row_sums(GeneratingVector({1, 1, 1}, 4)));
    CHECK(pd_via_row_sums(GeneratingVector({1, 2, 3}, 2)));
    CHECK_THROWS_AS(pd_via_row_sums(GeneratingVector({1, -2}, 4)),
                    PreconditionViolated);
    CHECK_THROWS_AS(pd_via_row_sums(GeneratingVector({1, 2}, 3)),
                    PreconditionViolated);
}

TEST_CASE("row-sum distinctness is equivalent to direct PD classification") {
    SplitMix64 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 4);
        const int m = (rng.next() & 1) != 0 ? 2 : 4;
        const GeneratingVector c =
            testsupport::random_grid_vector(rng, n, m, SignPattern::Positive);
        const bool pd_direct =
            classify(c).classification == Definiteness::PD;
        CHECK(pd_via_row_sums(c) == pd_direct);
    }
}

TEST_CASE("row extremes sit at the extreme generating entries") {
    SplitMix64 rng(103);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 4);
        const int m = (rng.next() & 1) != 0 ? 2 : 4;
        const GeneratingVector c =
            testsupport::random_grid_vector(rng, n, m, SignPattern::Positive);
        const RowSumProfile p = row_sum_profile(c);
        const auto& e = c.entries();
        const double c_min = *std::min_element(e.begin(), e.end());
        const double c_max = *std::max_element(e.begin(), e.end());
        CHECK(e[static_cast<std::size_t>(p.argmax_row)] == c_min);
        CHECK(e[static_cast<std::size_t>(p.argmin_row)] == c_max);
        CHECK(p.max_row_sum >= p.min_row_sum);
        CHECK(p.max_entry == c_max);
        CHECK(p.min_entry == c_min);
    }
}

TEST_CASE("duplicate entries force a zero of f at the pair difference") {
    SplitMix64 rng(107);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(rng.next() % 2);
        GeneratingVector base =
            testsupport::random_grid_vector(rng, n, 4, SignPattern::Positive);
        std::vector<double> e = base.entries();
        const int i = static_cast<int>(rng.next() % n);
        int j = static_cast<int>(rng.next() % n);
        if (j == i) j = (j + 1) % n;
        e[static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(i)];
        const GeneratingVector c(e, 4);
        const SymmetricTensor t = build_cauchy(c);
        std::vector<double> x(static_cast<std::size_t>(n), 0.0);
        x[static_cast<std::size_t>(i)] = 1.0;
        x[static_cast<std::size_t>(j)] = -1.0;
        CHECK(std::abs(t.apply_xm(x)) <= 1e-12);
        CHECK(classify(c).classification == Definiteness::PSD_NOT_PD);
    }
}

TEST_CASE("monotonicity probe sees no violations on PSD inputs") {
    const MonotonicityReport r12 =
        monotonicity_probe(GeneratingVector({1, 2}, 2), 1000, 42);
    CHECK(r12.trials == 1000);
    CHECK(r12.weak_violations == 0);
    CHECK(r12.axis_violations == 0);

    const MonotonicityReport rex =
        monotonicity_probe(GeneratingVector({1, 1, 1}, 4), 1000, 42);
    CHECK(rex.weak_violations == 0);
    CHECK(rex.strict_violations == 0);
}

TEST_CASE("monotonicity probe flags mixed-sign inputs at the axes") {
    const MonotonicityReport r =
        monotonicity_probe(GeneratingVector({1, -2}, 4), 200, 42);
    // f(e_2) = 1/(4*(-2)) < 0 = f(0) breaks monotonicity from the origin.
    CHECK(r.axis_violations >= 1);
    CHECK(r.weak_violations >= 1);
}

TEST_CASE("monotonicity probe is deterministic and schedule independent") {
    const GeneratingVector c({0.5, 1.5, 2.5}, 4);
    const MonotonicityReport a = monotonicity_probe(c, 300, 7, 1);
    const MonotonicityReport b = monotonicity_probe(c, 300, 7, 4);
    CHECK(a.weak_violations == b.weak_violations);
    CHECK(a.strict_violations == b.strict_violations);
    CHECK(a.degenerate_pairs == b.degenerate_pairs);
    CHECK(a.seed == b.seed);
}

TEST_CASE("matrix case agrees with the dense eigensolver sign pattern") {
    SplitMix64 rng(113);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 5);
        const GeneratingVector c = testsupport::random_grid_vector(
            rng, n, 2, SignPattern::Positive, true);
        const oracle::DenseSpectrum spectrum =
            oracle::dense_matrix_eig(build_cauchy(c));
        CHECK(classify(c).classification == Definiteness::PD);
        CHECK(spectrum.eigenvalues.front() > 0.0);
    }

    // A planted duplicate collapses the smallest eigenvalue to zero.
    const oracle::DenseSpectrum dup =
        oracle::dense_matrix_eig(build_cauchy(GeneratingVector({1, 1, 2}, 2)));
    CHECK(std::abs(dup.eigenvalues.front()) <= 1e-9);

    // Mixed signs give an indefinite matrix.
    const oracle::DenseSpectrum mixed =
        oracle::dense_matrix_eig(build_cauchy(GeneratingVector({1, -2}, 2)));
    CHECK(mixed.eigenvalues.front() < 0.0);
    CHECK(mixed.eigenvalues.back() > 0.0);
    CHECK(classify(GeneratingVector({1, -2}, 2)).classification ==
          Definiteness::NOT_PSD_NOT_NSD);
}
