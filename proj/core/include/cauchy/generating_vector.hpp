#pragma once

#include <span>
#include <vector>

#include "cauchy/errors.hpp"

namespace cauchy {

// A real vector c paired with a tensor order m. It generates the symmetric
// tensor whose entries are reciprocal multiset sums 1/(c_{i1}+...+c_{im}).
// Construction validates that every such sum is nonzero (which also forces
// every entry to be nonzero); vectors whose entries share one sign pass that
// check without enumeration.
class GeneratingVector {
public:
    GeneratingVector(std::vector<double> entries, int order);

    int order() const noexcept { return order_; }
    int dimension() const noexcept { return static_cast<int>(entries_.size()); }
    const std::vector<double>& entries() const noexcept { return entries_; }
    double operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }

    bool all_positive() const noexcept;
    bool all_negative() const noexcept;
    bool mixed_signs() const noexcept;
    double max_abs_entry() const noexcept;

    double multiset_sum(std::span<const int> tuple) const;

    // Entries picked out by `subset` (0-based, distinct, in range), with the
    // same order. The restriction of a valid vector is always valid.
    GeneratingVector restricted_to(std::span<const int> subset) const;

private:
    std::vector<double> entries_;
    int order_;
};

}  // namespace cauchy
