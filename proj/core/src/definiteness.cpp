#include "cauchy/definiteness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cauchy/cauchy_builders.hpp"
#include "cauchy/multiset.hpp"
#include "cauchy/parallel.hpp"
#include "cauchy/rng.hpp"
#include "cauchy/symmetric_tensor.hpp"

namespace cauchy {

const char* to_string(Definiteness d) {
    switch (d) {
        case Definiteness::PD: return "PD";
        case Definiteness::PSD_NOT_PD: return "PSD_NOT_PD";
        case Definiteness::ND: return "ND";
        case Definiteness::NSD_NOT_ND: return "NSD_NOT_ND";
        case Definiteness::NOT_PSD_NOT_NSD: return "NOT_PSD_NOT_NSD";
        case Definiteness::ODD_ORDER_NA: return "ODD_ORDER_NA";
    }
    return "?";
}

bool is_psd_class(Definiteness d) {
    return d == Definiteness::PD || d == Definiteness::PSD_NOT_PD;
}

namespace {

std::vector<std::pair<int, int>> duplicate_pairs(const GeneratingVector& c,
                                                 double dist_tol) {
    std::vector<std::pair<int, int>> dups;
    const auto& e = c.entries();
    const int n = c.dimension();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double a = e[static_cast<std::size_t>(i)];
            const double b = e[static_cast<std::size_t>(j)];
            const bool equal =
                dist_tol <= 0.0
                    ? a == b
                    : std::abs(a - b) <= dist_tol * std::max(std::abs(a), std::abs(b));
            if (equal) dups.emplace_back(i, j);
        }
    }
    return dups;
}

std::string pair_list(const std::vector<std::pair<int, int>>& dups) {
    std::ostringstream out;
    for (std::size_t k = 0; k < dups.size(); ++k) {
        if (k) out << ", ";
        out << '(' << dups[k].first + 1 << ',' << dups[k].second + 1 << ')';
    }
    return out.str();
}

}  // namespace

DefinitenessReport classify(const GeneratingVector& c, double dist_tol) {
    DefinitenessReport report;
    report.duplicate_pairs = duplicate_pairs(c, dist_tol);
    if (c.order() % 2 != 0) {
        report.classification = Definiteness::ODD_ORDER_NA;
        report.witness =
            "odd order: no nonzero odd-order tensor is positive semi-definite";
        return report;
    }
    const bool dup = !report.duplicate_pairs.empty();
    if (c.all_positive()) {
        if (dup) {
            report.classification = Definiteness::PSD_NOT_PD;
            report.witness =
                "c > 0 with duplicate entries " + pair_list(report.duplicate_pairs);
        } else {
            report.classification = Definiteness::PD;
            report.witness = "c > 0 with mutually distinct entries";
        }
        return report;
    }
    if (c.all_negative()) {
        if (dup) {
            report.classification = Definiteness::NSD_NOT_ND;
            report.witness =
                "c < 0 with duplicate entries " + pair_list(report.duplicate_pairs);
        } else {
            report.classification = Definiteness::ND;
            report.witness = "c < 0 with mutually distinct entries";
        }
        return report;
    }
    int pos = -1;
    int neg = -1;
    const auto& e = c.entries();
    for (int i = 0; i < c.dimension(); ++i) {
        if (pos < 0 && e[static_cast<std::size_t>(i)] > 0.0) pos = i;
        if (neg < 0 && e[static_cast<std::size_t>(i)] < 0.0) neg = i;
    }
    report.classification = Definiteness::NOT_PSD_NOT_NSD;
    std::ostringstream w;
    w << "mixed signs: entry " << pos + 1 << " is positive, entry " << neg + 1
      << " is negative";
    report.witness = w.str();
    return report;
}

RowSumProfile row_sum_profile(const GeneratingVector& c, double term_budget) {
    const int n = c.dimension();
    const int m = c.order();
    if (std::pow(static_cast<double>(n), m - 1) > term_budget) {
        throw BudgetExceeded("row-sum term count n^(m-1) exceeds the budget");
    }
    const auto& e = c.entries();
    std::vector<CompensatedSum> acc(static_cast<std::size_t>(n));
    for (MultisetCursor cur(n, m - 1); cur.valid(); cur.advance()) {
        double s = 0.0;
        for (int idx : cur.tuple()) s += e[static_cast<std::size_t>(idx)];
        const double w = multinomial_weight(cur.tuple());
        for (int i = 0; i < n; ++i) {
            acc[static_cast<std::size_t>(i)].add(
                w / (e[static_cast<std::size_t>(i)] + s));
        }
    }
    RowSumProfile profile;
    profile.row_sums.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        profile.row_sums[static_cast<std::size_t>(i)] =
            acc[static_cast<std::size_t>(i)].value();
    }
    const auto [min_it, max_it] =
        std::minmax_element(profile.row_sums.begin(), profile.row_sums.end());
    profile.min_row_sum = *min_it;
    profile.max_row_sum = *max_it;
    profile.argmin_row = static_cast<int>(min_it - profile.row_sums.begin());
    profile.argmax_row = static_cast<int>(max_it - profile.row_sums.begin());
    const auto [min_e, max_e] = std::minmax_element(e.begin(), e.end());
    profile.min_entry = *min_e;
    profile.max_entry = *max_e;
    return profile;
}

bool pd_via_row_sums(const GeneratingVector& c, double dist_tol,
                     double term_budget) {
    if (!c.all_positive()) {
        throw PreconditionViolated(
            "row-sum test for positive definiteness needs c > 0");
    }
    if (c.order() % 2 != 0) {
        throw PreconditionViolated(
            "row-sum test for positive definiteness needs even order");
    }
    const auto profile = row_sum_profile(c, term_budget);
    const auto& r = profile.row_sums;
    const int n = static_cast<int>(r.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double a = r[static_cast<std::size_t>(i)];
            const double b = r[static_cast<std::size_t>(j)];
            const bool equal =
                dist_tol <= 0.0
                    ? a == b
                    : std::abs(a - b) <= dist_tol * std::max(std::abs(a), std::abs(b));
            if (equal) return false;
        }
    }
    return true;
}

MonotonicityReport monotonicity_probe(const GeneratingVector& c, int trials,
                                      std::uint64_t seed, int threads) {
    const SymmetricTensor t = build_cauchy(c);
    const int n = c.dimension();
    MonotonicityReport report;
    report.trials = trials;
    report.axis_checks = n;
    report.seed = seed;

    std::vector<int> weak(static_cast<std::size_t>(std::max(trials, 0)), 0);
    std::vector<int> strict(static_cast<std::size_t>(std::max(trials, 0)), 0);
    std::vector<int> degenerate(static_cast<std::size_t>(std::max(trials, 0)), 0);

    parallel_for(trials, threads, [&](int trial) {
        SplitMix64 rng(SplitMix64::derive(seed, static_cast<std::uint64_t>(trial)));
        std::vector<double> y(static_cast<std::size_t>(n));
        std::vector<double> x(static_cast<std::size_t>(n));
        bool same = true;
        for (int i = 0; i < n; ++i) {
            y[static_cast<std::size_t>(i)] = rng.uniform(0.0, 2.0);
            const double d = rng.uniform();
            x[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] + d;
            if (d != 0.0) same = false;
        }
        const double fy = t.apply_xm(y);
        const double fx = t.apply_xm(x);
        const double tol = 1e-10 * (1.0 + std::abs(fx));
        if (fx < fy - tol) weak[static_cast<std::size_t>(trial)] = 1;
        if (same) {
            degenerate[static_cast<std::size_t>(trial)] = 1;
        } else if (fx <= fy) {
            strict[static_cast<std::size_t>(trial)] = 1;
        }
    });
    for (int i = 0; i < trials; ++i) {
        report.weak_violations += weak[static_cast<std::size_t>(i)];
        report.strict_violations += strict[static_cast<std::size_t>(i)];
        report.degenerate_pairs += degenerate[static_cast<std::size_t>(i)];
    }

    // x = e_i against y = 0: f(e_i) = 1/(m c_i), so any negative entry shows
    // up as a violation of f(e_i) >= f(0) = 0.
    std::vector<double> axis(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        axis[static_cast<std::size_t>(i)] = 1.0;
        const double f = t.apply_xm(axis);
        const double tol = 1e-10 * (1.0 + std::abs(f));
        if (f < -tol) ++report.axis_violations;
        axis[static_cast<std::size_t>(i)] = 0.0;
    }
    report.weak_violations += report.axis_violations;
    return report;
}

}  // namespace cauchy
