#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cauchy/generating_vector.hpp"

namespace cauchy {

// Sign class of the quadratic-like form x -> T x^m. For even order the class
// is fully decided by the generating vector: positive entries give PSD,
// positive and mutually distinct give PD, negative entries mirror both, and
// mixed signs give neither. Odd order admits no nonzero PSD tensor at all.
enum class Definiteness {
    PD,
    PSD_NOT_PD,
    ND,
    NSD_NOT_ND,
    NOT_PSD_NOT_NSD,
    ODD_ORDER_NA,
};

const char* to_string(Definiteness d);

// PD or PSD_NOT_PD.
bool is_psd_class(Definiteness d);

struct DefinitenessReport {
    Definiteness classification = Definiteness::ODD_ORDER_NA;
    std::string witness;
    std::vector<std::pair<int, int>> duplicate_pairs;  // 0-based, i < j
};

// dist_tol is a relative tolerance for treating two entries as equal;
// 0 means exact comparison.
DefinitenessReport classify(const GeneratingVector& c, double dist_tol = 0.0);

struct RowSumProfile {
    std::vector<double> row_sums;
    double max_row_sum = 0.0;  // R
    double min_row_sum = 0.0;  // r
    double max_entry = 0.0;    // a_bar
    double min_entry = 0.0;    // a_under
    int argmax_row = 0;        // 0-based
    int argmin_row = 0;
};

// Row sums r_i = sum over all (m-1)-index tuples of 1/(c_i + c_{i2} + ...),
// computed over weighted canonical multisets with compensated summation.
// Refuses when n^{m-1} exceeds term_budget.
RowSumProfile row_sum_profile(const GeneratingVector& c,
                              double term_budget = 1e8);

// For positive c and even m: the tensor is PD exactly when the row sums are
// mutually distinct. dist_tol as in classify.
bool pd_via_row_sums(const GeneratingVector& c, double dist_tol = 0.0,
                     double term_budget = 1e8);

struct MonotonicityReport {
    int trials = 0;
    int axis_checks = 0;
    std::uint64_t seed = 0;
    int weak_violations = 0;    // f(x) < f(y) - tol for x >= y >= 0
    int strict_violations = 0;  // f(x) <= f(y) for x >= y, x != y
    int axis_violations = 0;    // f(e_i) < -tol against f(0) = 0
    int degenerate_pairs = 0;   // draws with x == y, skipped for strict
};

// Samples y uniform in [0,2]^n and x = y + d with d uniform in [0,1]^n, then
// counts violations of weak and strict monotone increase of f on the
// nonnegative orthant. Also probes the axis points x = e_i against y = 0,
// which exposes any negative generating entry through f(e_i) = 1/(m c_i).
MonotonicityReport monotonicity_probe(const GeneratingVector& c, int trials,
                                      std::uint64_t seed, int threads = 1);

}  // namespace cauchy
