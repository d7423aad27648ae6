#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cauchy/generating_vector.hpp"

namespace cauchy::verify {

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus s);

struct Check {
    std::string tag;  // T2.1, T2.3, T2.5, T2.6, T2.7, T3.1, T3.2, T3.3, L3.1, INT
    CheckStatus status = CheckStatus::Skipped;
    std::string detail;
};

struct Options {
    std::uint64_t seed = 42;
    int restarts = 24;
    int threads = 1;
    double tuple_budget = 1e7;
    double term_budget = 1e8;
    int quad_samples = 8;
    double tol = 1e-8;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    int passes = 0;
    int failures = 0;
    int skipped = 0;
};

// Runs the structural guarantees that apply to the given generating vector
// and reports one check per tag. Suites: "psd" (sign characterizations and
// row-sum tests), "spectral" (eigenvalue brackets, odd-order sign audits),
// "hadamard" (product closure), "integral" (quadrature identity), or "all".
// Checks whose preconditions the input does not meet are reported as
// skipped, as are checks refused by the budgets.
Report run_suite(const GeneratingVector& c, const std::string& suite,
                 const Options& = {});

}  // namespace cauchy::verify
