#pragma once

#include <algorithm>
#include <vector>

#include "cauchy/errors.hpp"
#include "cauchy/generating_vector.hpp"
#include "cauchy/rng.hpp"

namespace testsupport {

enum class SignPattern { Positive, Negative, Mixed, Any };

// Generating vectors drawn from the half-integer grid {0.5, 1.0, ..., 3.0}
// with optional signs. Keeping entries on a coarse grid makes zero multiset
// sums an exact, detectable event (rejected and redrawn) and produces
// duplicate entries often enough to exercise the degenerate branches.
inline cauchy::GeneratingVector random_grid_vector(
    cauchy::SplitMix64& rng, int n, int m, SignPattern pattern,
    bool distinct = false) {
    for (int attempt = 0; attempt < 2000; ++attempt) {
        std::vector<double> c(static_cast<std::size_t>(n));
        for (double& v : c) {
            v = 0.5 * static_cast<double>(1 + rng.next() % 6);
            const bool flip = (rng.next() & 1) != 0;
            switch (pattern) {
                case SignPattern::Positive: break;
                case SignPattern::Negative: v = -v; break;
                case SignPattern::Mixed:
                case SignPattern::Any:
                    if (flip) v = -v;
                    break;
            }
        }
        if (pattern == SignPattern::Mixed) {
            const bool has_pos = std::any_of(c.begin(), c.end(),
                                             [](double v) { return v > 0; });
            const bool has_neg = std::any_of(c.begin(), c.end(),
                                             [](double v) { return v < 0; });
            if (!has_pos || !has_neg) continue;
        }
        if (distinct) {
            std::vector<double> sorted = c;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) !=
                sorted.end()) {
                continue;
            }
        }
        try {
            return cauchy::GeneratingVector(std::move(c), m);
        } catch (const cauchy::ZeroMultisetSum&) {
            continue;
        }
    }
    throw cauchy::Error("grid sampler failed to find a valid vector");
}

inline std::vector<double> random_box_vector(cauchy::SplitMix64& rng, int n,
                                             double lo, double hi) {
    std::vector<double> x(static_cast<std::size_t>(n));
    for (double& v : x) v = rng.uniform(lo, hi);
    return x;
}

}  // namespace testsupport
