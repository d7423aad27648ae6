#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "cauchy/cauchy_builders.hpp"
#include "cauchy/oracle.hpp"
#include "cauchy/spectral.hpp"
#include "support.hpp"

using namespace cauchy;
using testsupport::SignPattern;

namespace {

double h_residual(const GeneratingVector& c, const SpectralPair& pair) {
    const SymmetricTensor t = build_cauchy(c);
    const std::vector<double> y = t.apply_xm1(pair.x);
    double sq = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double xi = pair.x[i];
        const double target =
            pair.lambda * std::copysign(std::pow(std::abs(xi), t.order() - 1),
                                        (t.order() % 2 == 0) ? xi : xi);
        const double d = y[i] - target;
        sq += d * d;
    }
    return std::sqrt(sq);
}

}  // namespace

TEST_CASE("power iteration reproduces the 2x2 spectrum") {
    const GeneratingVector c({1, 2}, 2);
    const SpectralPair top = h_eigen_max(c);
    CHECK(top.converged);
    CHECK(top.kind == EigKind::H);
    const oracle::DenseSpectrum dense = oracle::dense_matrix_eig(build_cauchy(c));
    CHECK(top.lambda == doctest::Approx(dense.eigenvalues.back()).epsilon(1e-8));
    CHECK(top.lambda == doctest::Approx(0.7310001565).epsilon(1e-7));
}

TEST_CASE("uniform entries have the closed-form dominant pair") {
    const GeneratingVector c({2, 2, 2}, 4);
    const SpectralPair pair = h_eigen_max(c);
    CHECK(pair.lambda == doctest::Approx(27.0 / 8.0).epsilon(1e-10));
    for (double v : pair.x) {
        CHECK(v == doctest::Approx(std::pow(3.0, -0.25)).epsilon(1e-8));
    }
}

TEST_CASE("one-dimensional tensors are explicit") {
    const SpectralPair pair = h_eigen_max(GeneratingVector({5}, 3));
    CHECK(pair.lambda == doctest::Approx(1.0 / 15.0).epsilon(1e-12));
    CHECK(pair.x.size() == 1);
    CHECK(pair.x[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("power iteration needs a positive generating vector") {
    CHECK_THROWS_AS(h_eigen_max(GeneratingVector({1, -2}, 4)),
                    NotPositiveVector);
}

TEST_CASE("no-convergence carries the best iterate") {
    PowerOptions opt;
    opt.max_iter = 1;
    opt.tol = 1e-16;
    try {
        h_eigen_max(GeneratingVector({1, 2}, 2), opt);
        FAIL("expected NoConvergence");
    } catch (const NoConvergence& e) {
        CHECK(e.best().iterations == 1);
        CHECK_FALSE(e.best().converged);
        CHECK(e.best().lambda > 0.0);
    }
}

TEST_CASE("Perron vector is strictly positive with a tight residual") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 3);
        const int m = 2 + static_cast<int>(rng.next() % 3);
        const GeneratingVector c =
            testsupport::random_grid_vector(rng, n, m, SignPattern::Positive);
        const SpectralPair pair = h_eigen_max(c);
        CHECK(pair.converged);
        CHECK(pair.residual <= 1e-8);
        CHECK(*std::min_element(pair.x.begin(), pair.x.end()) > 1e-12);
        CHECK(h_residual(c, pair) <= 1e-8);

        // Rayleigh identity under the pair's own normalization.
        const double f = build_cauchy(c).apply_xm(pair.x);
        CHECK(std::abs(pair.lambda - f) <= 1e-8 * (1.0 + std::abs(f)));
    }
}

TEST_CASE("variational minimum matches the dense spectrum at order 2") {
    const GeneratingVector c({1, 2}, 2);
    const SpectralPair lo = h_lambda_min_variational(c);
    CHECK(lo.lambda == doctest::Approx(0.0189998439).epsilon(1e-5));
    const oracle::DenseSpectrum dense = oracle::dense_matrix_eig(build_cauchy(c));
    CHECK(std::abs(lo.lambda - dense.eigenvalues.front()) <= 1e-8);

    const SpectralPair hi = h_lambda_max_variational(c);
    CHECK(std::abs(hi.lambda - dense.eigenvalues.back()) <= 1e-8);
}

TEST_CASE("variational minimum finds the degenerate zero") {
    const SpectralPair lo =
        h_lambda_min_variational(GeneratingVector({1, 1, 1}, 4));
    CHECK(std::abs(lo.lambda) <= 1e-8);
}

TEST_CASE("variational candidates respect the mixed-sign caps") {
    const GeneratingVector c({1, -2}, 4);
    const SpectralPair lo = h_lambda_min_variational(c);
    CHECK(lo.lambda <= -0.125 + 1e-10);
    const SpectralPair hi = h_lambda_max_variational(c);
    CHECK(hi.lambda >= 0.25 - 1e-10);
    CHECK_THROWS_AS(h_lambda_min_variational(GeneratingVector({1, 2}, 3)),
                    OddOrderUnsupported);
}

TEST_CASE("bounds reproduce the frozen 2x2 bracket") {
    const BoundsReport report = bounds(GeneratingVector({1, 2}, 2));
    REQUIRE(report.thm31.applicable);
    CHECK(*report.thm31_lower == doctest::Approx(0.6321404857).epsilon(1e-9));
    CHECK(*report.thm31_upper == doctest::Approx(0.7924983400).epsilon(1e-9));
    CHECK_FALSE(report.lemma31.applicable);
}

TEST_CASE("bounds caps for a mixed-sign vector") {
    const BoundsReport report = bounds(GeneratingVector({1, -2, 4}, 4));
    REQUIRE(report.lemma31.applicable);
    CHECK(*report.lemma31_lower_cap == doctest::Approx(-0.125).epsilon(1e-15));
    CHECK(*report.lemma31_upper_floor == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(*report.lemma31_lower_cap < 0.0);
    CHECK(*report.lemma31_upper_floor > 0.0);
    CHECK_FALSE(report.thm31.applicable);
    CHECK_FALSE(report.thm31.reason.empty());
}

TEST_CASE("bounds flag the all-equal case as inapplicable") {
    const BoundsReport report = bounds(GeneratingVector({2, 2, 2}, 4));
    CHECK_FALSE(report.thm31.applicable);
    CHECK_FALSE(report.thm31.reason.empty());
}

TEST_CASE("bracket strictly contains the dominant eigenvalue") {
    SplitMix64 rng(43);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 4);
        const int m = (rng.next() & 1) != 0 ? 2 : 4;
        const GeneratingVector c =
            testsupport::random_grid_vector(rng, n, m, SignPattern::Positive);
        const BoundsReport report = bounds(c);
        if (!report.thm31.applicable) continue;
        const SpectralPair pair = h_eigen_max(c);
        CHECK(*report.thm31_lower < pair.lambda);
        CHECK(pair.lambda < *report.thm31_upper);
        ++checked;
    }
    CHECK(checked >= 20);
}

TEST_CASE("z search finds the uniform pair of the all-ones example") {
    ZSearchOptions opt;
    opt.restarts = 8;
    const ZSearchResult result =
        z_eigen_search(GeneratingVector({1, 1, 1}, 4), opt);
    REQUIRE_FALSE(result.pairs.empty());
    const auto it = std::max_element(
        result.pairs.begin(), result.pairs.end(),
        [](const SpectralPair& a, const SpectralPair& b) {
            return a.lambda < b.lambda;
        });
    CHECK(it->lambda == doctest::Approx(2.25).epsilon(1e-8));
    for (double v : it->x) {
        CHECK(std::abs(v) ==
              doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-7));
    }
    CHECK(result.attempts == 16);
}

TEST_CASE("one-dimensional odd tensors have the sign-mirrored Z pairs") {
    ZSearchOptions opt;
    opt.restarts = 6;
    const ZSearchResult result =
        z_eigen_search(GeneratingVector({5}, 3), opt);
    REQUIRE(result.pairs.size() == 2);
    CHECK(result.pairs.front().lambda == doctest::Approx(-1.0 / 15.0));
    CHECK(result.pairs.back().lambda == doctest::Approx(1.0 / 15.0));
}

TEST_CASE("z pairs satisfy their defining equation") {
    SplitMix64 rng(47);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 2);
        const int m = 2 + static_cast<int>(rng.next() % 3);
        const GeneratingVector c =
            testsupport::random_grid_vector(rng, n, m, SignPattern::Positive);
        ZSearchOptions opt;
        opt.restarts = 6;
        const ZSearchResult result = z_eigen_search(c, opt);
        const SymmetricTensor t = build_cauchy(c);
        for (const SpectralPair& pair : result.pairs) {
            CHECK(pair.converged);
            double norm = 0.0;
            for (double v : pair.x) norm += v * v;
            CHECK(std::abs(std::sqrt(norm) - 1.0) <= 1e-12);
            const std::vector<double> y = t.apply_xm1(pair.x);
            double sq = 0.0;
            double rayleigh = 0.0;
            for (std::size_t i = 0; i < y.size(); ++i) {
                const double d = y[i] - pair.lambda * pair.x[i];
                sq += d * d;
                rayleigh += pair.x[i] * y[i];
            }
            CHECK(std::sqrt(sq) <= 1e-8);
            CHECK(std::abs(rayleigh - pair.lambda) <=
                  1e-8 * (1.0 + std::abs(pair.lambda)));
        }
    }
}

TEST_CASE("z search is deterministic across thread counts") {
    const GeneratingVector c({0.5, 1.5, 2.5}, 3);
    ZSearchOptions a;
    a.restarts = 10;
    a.threads = 1;
    ZSearchOptions b = a;
    b.threads = 4;
    const ZSearchResult ra = z_eigen_search(c, a);
    const ZSearchResult rb = z_eigen_search(c, b);
    REQUIRE(ra.pairs.size() == rb.pairs.size());
    for (std::size_t i = 0; i < ra.pairs.size(); ++i) {
        CHECK(ra.pairs[i].lambda == rb.pairs[i].lambda);
        CHECK(ra.pairs[i].x == rb.pairs[i].x);
    }
    CHECK(ra.shift_used == rb.shift_used);
}

TEST_CASE("nonnegative even-order eigenvalues stay nonnegative") {
    SplitMix64 rng(53);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 3);
        const GeneratingVector c =
            testsupport::random_grid_vector(rng, n, 4, SignPattern::Positive);
        ZSearchOptions opt;
        opt.restarts = 4;
        for (const SpectralPair& pair : z_eigen_search(c, opt).pairs) {
            CHECK(pair.lambda >= -1e-8);
        }
        CHECK(h_eigen_max(c).lambda >= -1e-8);
    }
}

TEST_CASE("odd sign audit accepts theorem-conforming pairs") {
    const GeneratingVector c({1, 2, 3}, 3);
    ZSearchOptions opt;
    opt.restarts = 10;
    const ZSearchResult result = z_eigen_search(c, opt);
    REQUIRE_FALSE(result.pairs.empty());
    const SignAuditReport audit = odd_sign_audit(result.pairs, c);
    CHECK(audit.violations == 0);
    CHECK(audit.audited + audit.indeterminate ==
          static_cast<int>(result.pairs.size()));

    // The mirrored pair is also a Z-eigenpair for odd order and passes too.
    std::vector<SpectralPair> mirrored = result.pairs;
    for (SpectralPair& pair : mirrored) {
        pair.lambda = -pair.lambda;
        for (double& v : pair.x) v = -v;
    }
    CHECK(odd_sign_audit(mirrored, c).violations == 0);

    CHECK_THROWS_AS(odd_sign_audit(result.pairs, GeneratingVector({1, 2}, 2)),
                    PreconditionViolated);
    CHECK_THROWS_AS(
        odd_sign_audit(result.pairs, GeneratingVector({-1, -2, -3}, 3)),
        PreconditionViolated);
}

TEST_CASE("zero exclusion probe") {
    const ZeroExclusionReport report =
        zero_z_exclusion_probe(GeneratingVector({1, 2, 3}, 3), 16, 42);
    CHECK(report.floor > 1e-6);

    const ZeroExclusionReport tiny =
        zero_z_exclusion_probe(GeneratingVector({5}, 3), 4, 42);
    CHECK(tiny.floor == doctest::Approx(1.0 / 15.0).epsilon(1e-10));

    CHECK_THROWS_AS(zero_z_exclusion_probe(GeneratingVector({1, 2}, 4), 4, 42),
                    PreconditionViolated);
    CHECK_THROWS_AS(
        zero_z_exclusion_probe(GeneratingVector({1, -5, 3}, 3), 4, 42),
        PreconditionViolated);
    try {
        zero_z_exclusion_probe(GeneratingVector({1, 1, 2}, 3), 4, 42);
        FAIL("expected PreconditionViolated");
    } catch (const PreconditionViolated& e) {
        CHECK(std::string(e.what()).find("(1, 2)") != std::string::npos);
    }
}
