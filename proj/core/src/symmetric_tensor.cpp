#include "cauchy/symmetric_tensor.hpp"

#include <algorithm>
#include <cmath>

namespace cauchy {

namespace {

constexpr std::uint64_t kMaxCanonicalEntries = 50'000'000;

double ipow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

}  // namespace

SymmetricTensor::SymmetricTensor(int order, int dimension)
    : order_(order), dim_(dimension) {
    if (order_ < 2) throw PreconditionViolated("tensor order must be at least 2");
    if (dim_ < 1) throw PreconditionViolated("tensor dimension must be at least 1");
    if (order_ > 20 || order_ + dim_ > 64) {
        throw BudgetExceeded("tensor order/dimension outside supported range");
    }
    const std::uint64_t count = multiset_count(dim_, order_);
    if (count > kMaxCanonicalEntries) {
        throw BudgetExceeded("canonical storage would exceed the size budget");
    }
    values_.assign(static_cast<std::size_t>(count), 0.0);
    weights_.reserve(static_cast<std::size_t>(count));
    tuples_.reserve(static_cast<std::size_t>(count) *
                    static_cast<std::size_t>(order_));
    for (MultisetCursor cur(dim_, order_); cur.valid(); cur.advance()) {
        auto t = cur.tuple();
        tuples_.insert(tuples_.end(), t.begin(), t.end());
        weights_.push_back(multinomial_weight(t));
    }
}

std::size_t SymmetricTensor::rank_of(std::span<const int> sorted) const {
    return multiset_rank(sorted, dim_);
}

double SymmetricTensor::entry(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != order_) {
        throw DimensionMismatch("index tuple length must equal tensor order");
    }
    std::vector<int> sorted(idx.begin(), idx.end());
    for (int v : sorted) {
        if (v < 0 || v >= dim_) throw IndexOutOfRange("tensor index out of range");
    }
    std::sort(sorted.begin(), sorted.end());
    return values_[rank_of(sorted)];
}

void SymmetricTensor::check_vector(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim_) {
        throw DimensionMismatch("vector length must equal tensor dimension");
    }
}

double SymmetricTensor::apply_xm(std::span<const double> x) const {
    check_vector(x);
    const std::size_t count = values_.size();
    const int m = order_;
    double sum = 0.0;
    const int32_t* tp = tuples_.data();
    for (std::size_t pos = 0; pos < count; ++pos, tp += m) {
        double prod = 1.0;
        for (int j = 0; j < m; ++j) prod *= x[static_cast<std::size_t>(tp[j])];
        sum += values_[pos] * weights_[pos] * prod;
    }
    return sum;
}

std::vector<double> SymmetricTensor::apply_xm1(std::span<const double> x) const {
    check_vector(x);
    const std::size_t count = values_.size();
    const int m = order_;
    std::vector<double> out(static_cast<std::size_t>(dim_), 0.0);

    // Scratch for the run-length decomposition of each canonical tuple.
    std::vector<int> run_idx(static_cast<std::size_t>(m));
    std::vector<int> run_len(static_cast<std::size_t>(m));
    std::vector<double> run_pow(static_cast<std::size_t>(m));
    std::vector<double> prefix(static_cast<std::size_t>(m) + 1);
    std::vector<double> suffix(static_cast<std::size_t>(m) + 1);

    const int32_t* tp = tuples_.data();
    for (std::size_t pos = 0; pos < count; ++pos, tp += m) {
        const double coeff = values_[pos] * weights_[pos];
        if (coeff == 0.0) continue;

        int runs = 0;
        for (int j = 0; j < m;) {
            int k = j + 1;
            while (k < m && tp[k] == tp[j]) ++k;
            run_idx[static_cast<std::size_t>(runs)] = tp[j];
            run_len[static_cast<std::size_t>(runs)] = k - j;
            run_pow[static_cast<std::size_t>(runs)] =
                ipow(x[static_cast<std::size_t>(tp[j])], k - j);
            ++runs;
            j = k;
        }
        prefix[0] = 1.0;
        for (int r = 0; r < runs; ++r) {
            prefix[static_cast<std::size_t>(r) + 1] =
                prefix[static_cast<std::size_t>(r)] *
                run_pow[static_cast<std::size_t>(r)];
        }
        suffix[static_cast<std::size_t>(runs)] = 1.0;
        for (int r = runs - 1; r >= 0; --r) {
            suffix[static_cast<std::size_t>(r)] =
                suffix[static_cast<std::size_t>(r) + 1] *
                run_pow[static_cast<std::size_t>(r)];
        }
        for (int r = 0; r < runs; ++r) {
            const int i = run_idx[static_cast<std::size_t>(r)];
            const int k = run_len[static_cast<std::size_t>(r)];
            // weight * k / m equals the ordered count of the reduced tuple.
            const double reduced = prefix[static_cast<std::size_t>(r)] *
                                   suffix[static_cast<std::size_t>(r) + 1] *
                                   ipow(x[static_cast<std::size_t>(i)], k - 1);
            out[static_cast<std::size_t>(i)] +=
                coeff * static_cast<double>(k) / static_cast<double>(m) * reduced;
        }
    }
    return out;
}

std::vector<double> SymmetricTensor::contract_matrix(
    std::span<const double> x) const {
    check_vector(x);
    const std::size_t count = values_.size();
    const int m = order_;
    const std::size_t n = static_cast<std::size_t>(dim_);
    std::vector<double> out(n * n, 0.0);

    std::vector<int> run_idx(static_cast<std::size_t>(m));
    std::vector<int> run_len(static_cast<std::size_t>(m));

    const double pair_scale = static_cast<double>(m) * (m - 1);
    const int32_t* tp = tuples_.data();
    for (std::size_t pos = 0; pos < count; ++pos, tp += m) {
        const double coeff = values_[pos] * weights_[pos];
        if (coeff == 0.0) continue;

        int runs = 0;
        for (int j = 0; j < m;) {
            int k = j + 1;
            while (k < m && tp[k] == tp[j]) ++k;
            run_idx[static_cast<std::size_t>(runs)] = tp[j];
            run_len[static_cast<std::size_t>(runs)] = k - j;
            ++runs;
            j = k;
        }
        for (int r = 0; r < runs; ++r) {
            for (int s = 0; s < runs; ++s) {
                const int i = run_idx[static_cast<std::size_t>(r)];
                const int j = run_idx[static_cast<std::size_t>(s)];
                const int ki = run_len[static_cast<std::size_t>(r)];
                const int kj = run_len[static_cast<std::size_t>(s)];
                const int pairs = ki * (kj - (r == s ? 1 : 0));
                if (pairs == 0) continue;
                double prod = 1.0;
                for (int q = 0; q < runs; ++q) {
                    int e = run_len[static_cast<std::size_t>(q)];
                    if (q == r) --e;
                    if (q == s) --e;
                    prod *= ipow(
                        x[static_cast<std::size_t>(run_idx[static_cast<std::size_t>(q)])],
                        e);
                }
                out[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] +=
                    coeff * static_cast<double>(pairs) / pair_scale * prod;
            }
        }
    }
    return out;
}

}  // namespace cauchy
