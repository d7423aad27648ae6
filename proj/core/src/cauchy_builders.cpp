#include "cauchy/cauchy_builders.hpp"

#include <cmath>

namespace cauchy {

SymmetricTensor build_cauchy(const GeneratingVector& c,
                             const BuildOptions& options,
                             BuildDiagnostics* diagnostics) {
    const int n = c.dimension();
    const int m = c.order();
    SymmetricTensor t(m, n);
    const double threshold = options.near_singular_scale * c.max_abs_entry();
    if (diagnostics) {
        diagnostics->near_singular.clear();
        diagnostics->threshold = threshold;
    }
    const auto& entries = c.entries();
    for (MultisetCursor cur(n, m); cur.valid(); cur.advance()) {
        double s = 0.0;
        for (int idx : cur.tuple()) s += entries[static_cast<std::size_t>(idx)];
        if (s == 0.0) {
            auto tup = cur.tuple();
            throw ZeroMultisetSum(std::vector<int>(tup.begin(), tup.end()));
        }
        if (diagnostics && std::abs(s) < threshold) {
            auto tup = cur.tuple();
            diagnostics->near_singular.push_back(
                {std::vector<int>(tup.begin(), tup.end()), s});
        }
        t.set_value_at(cur.position(), 1.0 / s);
    }
    return t;
}

GeneratingVector hilbert_generating_vector(int n, int m) {
    if (n < 1) throw PreconditionViolated("Hilbert dimension must be at least 1");
    if (m < 2) throw PreconditionViolated("Hilbert order must be at least 2");
    std::vector<double> entries(static_cast<std::size_t>(n));
    const double offset = 1.0 / static_cast<double>(m);
    for (int i = 0; i < n; ++i) {
        entries[static_cast<std::size_t>(i)] = static_cast<double>(i) + offset;
    }
    return GeneratingVector(std::move(entries), m);
}

SymmetricTensor build_hilbert(int n, int m) {
    return build_cauchy(hilbert_generating_vector(n, m));
}

SymmetricTensor principal_subtensor(const GeneratingVector& c,
                                    std::span<const int> subset) {
    return build_cauchy(c.restricted_to(subset));
}

bool is_hankel_compatible(const GeneratingVector& c, double tol) {
    const auto& e = c.entries();
    for (std::size_t i = 0; i + 2 < e.size(); ++i) {
        if (std::abs(e[i + 2] - 2.0 * e[i + 1] + e[i]) > tol) return false;
    }
    return true;
}

}  // namespace cauchy
