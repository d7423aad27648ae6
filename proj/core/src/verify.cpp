#include "cauchy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>

#include "cauchy/cauchy_builders.hpp"
#include "cauchy/definiteness.hpp"
#include "cauchy/hadamard.hpp"
#include "cauchy/oracle.hpp"
#include "cauchy/rng.hpp"
#include "cauchy/spectral.hpp"

namespace cauchy::verify {

const char* to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "unknown";
}

namespace {

std::string fmt(double v) {
    std::ostringstream out;
    out << std::setprecision(9) << v;
    return out.str();
}

// Shared lazily-computed artifacts so one suite run builds the tensor and
// minimizes on the sphere at most once.
struct SuiteContext {
    const GeneratingVector& c;
    const Options& opt;
    std::optional<SymmetricTensor> tensor;
    std::optional<oracle::SphereMinResult> smin;
    std::string tensor_error;

    const SymmetricTensor* built() {
        if (!tensor && tensor_error.empty()) {
            try {
                tensor.emplace(build_cauchy(c));
            } catch (const Error& e) {
                tensor_error = e.what();
            }
        }
        return tensor ? &*tensor : nullptr;
    }

    const oracle::SphereMinResult* sphere() {
        if (!smin) {
            const SymmetricTensor* t = built();
            if (t == nullptr) return nullptr;
            smin.emplace(oracle::sphere_min(*t, opt.restarts, opt.seed,
                                            opt.threads));
        }
        return &*smin;
    }
};

Check check_psd_characterization(SuiteContext& ctx) {
    Check check{"T2.1", CheckStatus::Skipped, ""};
    if (ctx.c.order() % 2 != 0) {
        check.detail = "odd order: definiteness characterization needs even order";
        return check;
    }
    const DefinitenessReport report = classify(ctx.c);
    const oracle::SphereMinResult* smin = ctx.sphere();
    if (smin == nullptr) {
        check.detail = "tensor too large to build: " + ctx.tensor_error;
        return check;
    }
    const bool psd_claim = is_psd_class(report.classification);
    const bool psd_seen = smin->value >= -ctx.opt.tol;
    check.status = (psd_claim == psd_seen) ? CheckStatus::Pass : CheckStatus::Fail;
    check.detail = std::string("classification ") +
                   to_string(report.classification) + ", sphere minimum " +
                   fmt(smin->value);
    return check;
}

Check check_pd_distinctness(SuiteContext& ctx) {
    Check check{"T2.3", CheckStatus::Skipped, ""};
    if (ctx.c.order() % 2 != 0) {
        check.detail = "odd order: definiteness characterization needs even order";
        return check;
    }
    if (!ctx.c.all_positive()) {
        check.detail = "distinctness dichotomy needs c > 0";
        return check;
    }
    const DefinitenessReport report = classify(ctx.c);
    const SymmetricTensor* t = ctx.built();
    if (t == nullptr) {
        check.detail = "tensor too large to build: " + ctx.tensor_error;
        return check;
    }
    if (!report.duplicate_pairs.empty()) {
        const auto [i, j] = report.duplicate_pairs.front();
        std::vector<double> x(static_cast<std::size_t>(ctx.c.dimension()), 0.0);
        x[static_cast<std::size_t>(i)] = 1.0;
        x[static_cast<std::size_t>(j)] = -1.0;
        const double fx = t->apply_xm(x);
        const bool degenerate_seen = std::abs(fx) <= 1e-12;
        const bool not_pd = report.classification != Definiteness::PD;
        check.status = (degenerate_seen && not_pd) ? CheckStatus::Pass
                                                   : CheckStatus::Fail;
        std::ostringstream detail;
        detail << "duplicate entries at (" << i + 1 << ", " << j + 1
               << "): f(e_" << i + 1 << " - e_" << j + 1 << ") = " << fmt(fx);
        check.detail = detail.str();
        return check;
    }
    const oracle::SphereMinResult* smin = ctx.sphere();
    const bool pd_claim = report.classification == Definiteness::PD;
    const bool pd_seen = smin->value > ctx.opt.tol;
    check.status = (pd_claim && pd_seen) ? CheckStatus::Pass : CheckStatus::Fail;
    check.detail = "distinct positive entries, sphere minimum " +
                   fmt(smin->value);
    return check;
}

Check check_row_extremes(SuiteContext& ctx) {
    Check check{"T2.5", CheckStatus::Skipped, ""};
    if (!ctx.c.all_positive()) {
        check.detail = "row-sum extremes need c > 0";
        return check;
    }
    RowSumProfile profile;
    try {
        profile = row_sum_profile(ctx.c, ctx.opt.term_budget);
    } catch (const BudgetExceeded& e) {
        check.detail = e.what();
        return check;
    }
    const auto& e = ctx.c.entries();
    const double c_min = *std::min_element(e.begin(), e.end());
    const double c_max = *std::max_element(e.begin(), e.end());
    const bool max_row_at_min_c =
        e[static_cast<std::size_t>(profile.argmax_row)] == c_min;
    const bool min_row_at_max_c =
        e[static_cast<std::size_t>(profile.argmin_row)] == c_max;
    const bool ordered = profile.max_row_sum >= profile.min_row_sum;
    check.status = (max_row_at_min_c && min_row_at_max_c && ordered)
                       ? CheckStatus::Pass
                       : CheckStatus::Fail;
    check.detail = "R = " + fmt(profile.max_row_sum) + " at row " +
                   std::to_string(profile.argmax_row + 1) + ", r = " +
                   fmt(profile.min_row_sum) + " at row " +
                   std::to_string(profile.argmin_row + 1);
    return check;
}

Check check_row_sum_pd(SuiteContext& ctx) {
    Check check{"T2.6", CheckStatus::Skipped, ""};
    if (ctx.c.order() % 2 != 0 || !ctx.c.all_positive()) {
        check.detail = "row-sum distinctness criterion needs c > 0 and even order";
        return check;
    }
    bool pd_rows = false;
    try {
        pd_rows = pd_via_row_sums(ctx.c, 0.0, ctx.opt.term_budget);
    } catch (const BudgetExceeded& e) {
        check.detail = e.what();
        return check;
    }
    const bool pd_direct = classify(ctx.c).classification == Definiteness::PD;
    check.status = (pd_rows == pd_direct) ? CheckStatus::Pass : CheckStatus::Fail;
    std::ostringstream detail;
    detail << "row sums " << (pd_rows ? "mutually distinct" : "contain ties")
           << ", direct classification " << (pd_direct ? "PD" : "not PD");
    check.detail = detail.str();
    return check;
}

Check check_hadamard_closure(SuiteContext& ctx) {
    Check check{"T2.7", CheckStatus::Skipped, ""};
    if (ctx.c.order() % 2 != 0) {
        check.detail = "odd order: closure theorem needs even order";
        return check;
    }
    if (!ctx.c.all_positive()) {
        check.detail = "closure theorem needs c > 0";
        return check;
    }
    const SymmetricTensor* t = ctx.built();
    if (t == nullptr) {
        check.detail = "tensor too large to build: " + ctx.tensor_error;
        return check;
    }
    const SymmetricTensor product = hadamard(*t, *t);
    const oracle::SphereMinResult smin =
        oracle::sphere_min(product, ctx.opt.restarts, ctx.opt.seed,
                           ctx.opt.threads);
    const bool pd_factor = classify(ctx.c).classification == Definiteness::PD;
    bool ok = smin.value >= -ctx.opt.tol;
    if (pd_factor) ok = ok && smin.value > 1e-10;
    check.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    check.detail = std::string("self product sphere minimum ") +
                   fmt(smin.value) +
                   (pd_factor ? " (PD factors, positive margin required)"
                              : " (PSD factors)");
    return check;
}

Check check_bracket(SuiteContext& ctx) {
    Check check{"T3.1", CheckStatus::Skipped, ""};
    BoundsReport report;
    try {
        report = bounds(ctx.c, ctx.opt.term_budget);
    } catch (const BudgetExceeded& e) {
        check.detail = e.what();
        return check;
    }
    if (!report.thm31.applicable) {
        check.detail = report.thm31.reason;
        return check;
    }
    SpectralPair pair;
    try {
        PowerOptions popt;
        popt.tol = 1e-10;
        pair = h_eigen_max(ctx.c, popt);
    } catch (const NoConvergence& e) {
        check.status = CheckStatus::Fail;
        check.detail = e.what();
        return check;
    }
    const double lo = *report.thm31_lower;
    const double hi = *report.thm31_upper;
    check.status = (lo < pair.lambda && pair.lambda < hi) ? CheckStatus::Pass
                                                          : CheckStatus::Fail;
    check.detail = "lambda_max " + fmt(pair.lambda) + " inside (" + fmt(lo) +
                   ", " + fmt(hi) + ")";
    return check;
}

Check check_odd_sign(SuiteContext& ctx) {
    Check check{"T3.2", CheckStatus::Skipped, ""};
    if (ctx.c.order() % 2 == 0) {
        check.detail = "even order: sign theorem applies to odd order";
        return check;
    }
    if (!ctx.c.all_positive()) {
        check.detail = "sign theorem needs c > 0";
        return check;
    }
    ZSearchOptions zopt;
    zopt.restarts = ctx.opt.restarts;
    zopt.seed = ctx.opt.seed;
    zopt.threads = ctx.opt.threads;
    const ZSearchResult found = z_eigen_search(ctx.c, zopt);
    if (found.pairs.empty()) {
        check.detail = "no converged Z-pairs to audit";
        return check;
    }
    const SignAuditReport audit = odd_sign_audit(found.pairs, ctx.c);
    check.status = (audit.violations == 0) ? CheckStatus::Pass : CheckStatus::Fail;
    std::ostringstream detail;
    detail << audit.audited << " pairs audited, " << audit.violations
           << " sign violations, " << audit.indeterminate << " indeterminate";
    check.detail = detail.str();
    return check;
}

Check check_zero_exclusion(SuiteContext& ctx) {
    Check check{"T3.3", CheckStatus::Skipped, ""};
    if (ctx.c.order() % 2 == 0) {
        check.detail = "even order: zero-exclusion theorem applies to odd order";
        return check;
    }
    try {
        const ZeroExclusionReport probe = zero_z_exclusion_probe(
            ctx.c, ctx.opt.restarts, ctx.opt.seed, ctx.opt.threads);
        check.status = (probe.floor > 1e-6) ? CheckStatus::Pass
                                            : CheckStatus::Fail;
        check.detail = "contraction norm floor " + fmt(probe.floor);
    } catch (const PreconditionViolated& e) {
        check.detail = e.what();
    }
    return check;
}

Check check_mixed_sign_caps(SuiteContext& ctx) {
    Check check{"L3.1", CheckStatus::Skipped, ""};
    BoundsReport report;
    try {
        report = bounds(ctx.c, ctx.opt.term_budget);
    } catch (const BudgetExceeded& e) {
        check.detail = e.what();
        return check;
    }
    if (!report.lemma31.applicable) {
        check.detail = report.lemma31.reason;
        return check;
    }
    VariationalOptions vopt;
    vopt.restarts = ctx.opt.restarts;
    vopt.seed = ctx.opt.seed;
    vopt.threads = ctx.opt.threads;
    SpectralPair lo;
    SpectralPair hi;
    try {
        lo = h_lambda_min_variational(ctx.c, vopt);
        hi = h_lambda_max_variational(ctx.c, vopt);
    } catch (const Error& e) {
        check.status = CheckStatus::Fail;
        check.detail = e.what();
        return check;
    }
    const double cap = *report.lemma31_lower_cap;
    const double floor = *report.lemma31_upper_floor;
    const bool cap_ok = lo.lambda <= cap + 1e-10;
    const bool floor_ok = hi.lambda >= floor - 1e-10;
    check.status = (cap_ok && floor_ok) ? CheckStatus::Pass : CheckStatus::Fail;
    check.detail = "lambda_min candidate " + fmt(lo.lambda) + " vs cap " +
                   fmt(cap) + "; lambda_max candidate " + fmt(hi.lambda) +
                   " vs floor " + fmt(floor);
    return check;
}

Check check_integral_identity(SuiteContext& ctx) {
    Check check{"INT", CheckStatus::Skipped, ""};
    if (!ctx.c.all_positive()) {
        check.detail = "integral representation needs c > 0";
        return check;
    }
    if (ctx.built() == nullptr) {
        check.detail = "tensor too large to build: " + ctx.tensor_error;
        return check;
    }
    const int n = ctx.c.dimension();
    double worst = 0.0;
    long evaluations = 0;
    for (int s = 0; s < ctx.opt.quad_samples; ++s) {
        SplitMix64 rng(SplitMix64::derive(ctx.opt.seed,
                                          1000 + static_cast<std::uint64_t>(s)));
        std::vector<double> x(static_cast<std::size_t>(n));
        for (double& v : x) v = rng.uniform(-1.0, 1.0);
        try {
            const auto report = oracle::integral_identity_check(ctx.c, x, 1e-10);
            const double rel =
                report.discrepancy / (1.0 + std::abs(report.reference));
            worst = std::max(worst, rel);
            evaluations += report.evaluations;
        } catch (const QuadratureFailure& e) {
            check.status = CheckStatus::Fail;
            check.detail = e.what();
            return check;
        }
    }
    check.status = (worst <= ctx.opt.tol) ? CheckStatus::Pass : CheckStatus::Fail;
    std::ostringstream detail;
    detail << ctx.opt.quad_samples << " samples, worst relative discrepancy "
           << fmt(worst) << ", " << evaluations << " integrand evaluations";
    check.detail = detail.str();
    return check;
}

}  // namespace

Report run_suite(const GeneratingVector& c, const std::string& suite,
                 const Options& options) {
    SuiteContext ctx{c, options, std::nullopt, std::nullopt, {}};
    Report report;
    report.suite = suite;

    const bool all = suite == "all";
    if (!all && suite != "psd" && suite != "spectral" && suite != "hadamard" &&
        suite != "integral") {
        throw PreconditionViolated(
            "unknown verification suite: " + suite +
            " (expected all, psd, spectral, hadamard, or integral)");
    }

    if (all || suite == "psd") {
        report.checks.push_back(check_psd_characterization(ctx));
        report.checks.push_back(check_pd_distinctness(ctx));
        report.checks.push_back(check_row_extremes(ctx));
        report.checks.push_back(check_row_sum_pd(ctx));
    }
    if (all || suite == "hadamard") {
        report.checks.push_back(check_hadamard_closure(ctx));
    }
    if (all || suite == "spectral") {
        report.checks.push_back(check_bracket(ctx));
        report.checks.push_back(check_odd_sign(ctx));
        report.checks.push_back(check_zero_exclusion(ctx));
        report.checks.push_back(check_mixed_sign_caps(ctx));
    }
    if (all || suite == "integral") {
        report.checks.push_back(check_integral_identity(ctx));
    }

    for (const Check& check : report.checks) {
        switch (check.status) {
            case CheckStatus::Pass: ++report.passes; break;
            case CheckStatus::Fail: ++report.failures; break;
            case CheckStatus::Skipped: ++report.skipped; break;
        }
    }
    return report;
}

}  // namespace cauchy::verify
