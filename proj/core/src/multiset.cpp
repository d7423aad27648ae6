#include "cauchy/multiset.hpp"

#include "cauchy/errors.hpp"

namespace cauchy {

std::uint64_t binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    std::uint64_t r = 1;
    for (int i = 1; i <= b; ++i) {
        // Exact at every step: r holds C(a-b+i-1, i-1) and the product
        // r * (a-b+i) is divisible by i.
        r = r * static_cast<std::uint64_t>(a - b + i) /
            static_cast<std::uint64_t>(i);
    }
    return r;
}

std::uint64_t multiset_count(int n, int m) {
    if (n <= 0 || m < 0) return 0;
    return binomial(n + m - 1, m);
}

double multinomial_weight(std::span<const int> sorted_tuple) {
    const int m = static_cast<int>(sorted_tuple.size());
    std::uint64_t numerator = 1;
    for (int i = 2; i <= m; ++i) numerator *= static_cast<std::uint64_t>(i);
    std::uint64_t denom = 1;
    int run = 1;
    for (int i = 1; i < m; ++i) {
        if (sorted_tuple[i] == sorted_tuple[i - 1]) {
            ++run;
            denom *= static_cast<std::uint64_t>(run);
        } else {
            run = 1;
        }
    }
    return static_cast<double>(numerator / denom);
}

std::size_t multiset_rank(std::span<const int> sorted_tuple, int n) {
    const int m = static_cast<int>(sorted_tuple.size());
    std::uint64_t pos = 0;
    for (int j = 0; j < m; ++j) {
        const int lo = (j == 0) ? 0 : sorted_tuple[j - 1];
        const int t = sorted_tuple[j];
        const int k = m - 1 - j;
        // Count of multisets sharing the prefix but with a smaller value in
        // slot j: sum over v in [lo, t) of C(n - v + k - 1, k), telescoped.
        pos += binomial(n - lo + k, k + 1) - binomial(n - t + k, k + 1);
    }
    return static_cast<std::size_t>(pos);
}

MultisetCursor::MultisetCursor(int n, int m) : n_(n) {
    if (n >= 1 && m >= 0) {
        tuple_.assign(static_cast<std::size_t>(m), 0);
        valid_ = true;
    }
}

void MultisetCursor::advance() {
    if (!valid_) return;
    int m = static_cast<int>(tuple_.size());
    int j = m - 1;
    while (j >= 0 && tuple_[static_cast<std::size_t>(j)] == n_ - 1) --j;
    if (j < 0) {
        valid_ = false;
        return;
    }
    const int v = ++tuple_[static_cast<std::size_t>(j)];
    for (int i = j + 1; i < m; ++i) tuple_[static_cast<std::size_t>(i)] = v;
    ++pos_;
}

}  // namespace cauchy
