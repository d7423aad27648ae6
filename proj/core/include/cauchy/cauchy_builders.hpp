#pragma once

#include <span>
#include <vector>

#include "cauchy/generating_vector.hpp"
#include "cauchy/symmetric_tensor.hpp"

namespace cauchy {

struct BuildOptions {
    // A multiset sum s triggers a near-singular warning when
    // |s| < near_singular_scale * max|c_i| (and s != 0).
    double near_singular_scale = 1e-12;
};

struct NearSingularWarning {
    std::vector<int> indices;  // 0-based sorted tuple
    double sum = 0.0;
};

struct BuildDiagnostics {
    std::vector<NearSingularWarning> near_singular;
    double threshold = 0.0;
};

// Tensor with entries 1/(c_{i1}+...+c_{im}). Warnings about nearly vanishing
// sums are collected into `diagnostics` when provided; an exactly vanishing
// sum throws ZeroMultisetSum.
SymmetricTensor build_cauchy(const GeneratingVector& c,
                             const BuildOptions& options = {},
                             BuildDiagnostics* diagnostics = nullptr);

// Generating vector c_i = i - 1 + 1/m (1-based i), which produces the order-m
// Hilbert tensor with entries 1/(i1+...+im-m+1).
GeneratingVector hilbert_generating_vector(int n, int m);

SymmetricTensor build_hilbert(int n, int m);

// Cauchy tensor of the entries of c picked out by `subset` (0-based,
// distinct, nonempty). Equals the corresponding principal block of the full
// tensor.
SymmetricTensor principal_subtensor(const GeneratingVector& c,
                                    std::span<const int> subset);

// True when consecutive second differences of c vanish within tol, i.e. c is
// an arithmetic progression. Exactly then every entry depends only on the
// index sum i1+...+im, so the tensor carries a Hankel structure.
bool is_hankel_compatible(const GeneratingVector& c, double tol = 1e-10);

}  // namespace cauchy
