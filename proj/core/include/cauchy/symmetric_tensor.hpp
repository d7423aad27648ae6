#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cauchy/errors.hpp"
#include "cauchy/multiset.hpp"

namespace cauchy {

// Dense fully symmetric tensor of order m and dimension n. Storage holds one
// value per canonical (sorted) index multiset, C(n+m-1, m) slots total, with
// the arrangement multiplicity of each multiset precomputed so contractions
// run over canonical slots only.
class SymmetricTensor {
public:
    SymmetricTensor(int order, int dimension);

    int order() const noexcept { return order_; }
    int dimension() const noexcept { return dim_; }
    std::size_t canonical_size() const noexcept { return values_.size(); }

    // Entry under any index ordering; the tuple is sorted internally.
    double entry(std::span<const int> idx) const;

    double value_at(std::size_t pos) const { return values_[pos]; }
    void set_value_at(std::size_t pos, double v) { values_[pos] = v; }
    double weight_at(std::size_t pos) const { return weights_[pos]; }
    std::span<const int32_t> tuple_at(std::size_t pos) const {
        return {tuples_.data() + pos * static_cast<std::size_t>(order_),
                static_cast<std::size_t>(order_)};
    }

    // Full contraction T x^m.
    double apply_xm(std::span<const double> x) const;

    // Vector contraction (T x^{m-1})_i over the first slot.
    std::vector<double> apply_xm1(std::span<const double> x) const;

    // Matrix contraction T x^{m-2}, row-major n*n. Needs m >= 2.
    std::vector<double> contract_matrix(std::span<const double> x) const;

private:
    std::size_t rank_of(std::span<const int> sorted) const;
    void check_vector(std::span<const double> x) const;

    int order_;
    int dim_;
    std::vector<double> values_;
    std::vector<double> weights_;
    std::vector<int32_t> tuples_;
};

}  // namespace cauchy
