#include "cauchy/generating_vector.hpp"

#include <algorithm>
#include <cmath>

#include "cauchy/multiset.hpp"

namespace cauchy {

namespace {

constexpr std::uint64_t kValidationBudget = 50'000'000;

void validate_sums(const std::vector<double>& entries, int m) {
    const int n = static_cast<int>(entries.size());
    for (int i = 0; i < n; ++i) {
        if (entries[static_cast<std::size_t>(i)] == 0.0) {
            throw ZeroMultisetSum(std::vector<int>(static_cast<std::size_t>(m), i));
        }
    }
    // Entries of one sign cannot cancel; only mixed signs need enumeration.
    const bool pos = std::all_of(entries.begin(), entries.end(),
                                 [](double v) { return v > 0.0; });
    const bool neg = std::all_of(entries.begin(), entries.end(),
                                 [](double v) { return v < 0.0; });
    if (pos || neg) return;

    if (multiset_count(n, m) > kValidationBudget) {
        throw BudgetExceeded(
            "mixed-sign generating vector too large to validate multiset sums");
    }
    for (MultisetCursor cur(n, m); cur.valid(); cur.advance()) {
        double s = 0.0;
        for (int idx : cur.tuple()) s += entries[static_cast<std::size_t>(idx)];
        if (s == 0.0) {
            auto t = cur.tuple();
            throw ZeroMultisetSum(std::vector<int>(t.begin(), t.end()));
        }
    }
}

}  // namespace

GeneratingVector::GeneratingVector(std::vector<double> entries, int order)
    : entries_(std::move(entries)), order_(order) {
    if (entries_.empty()) {
        throw PreconditionViolated("generating vector needs at least one entry");
    }
    if (order_ < 2) {
        throw PreconditionViolated("tensor order must be at least 2");
    }
    for (double v : entries_) {
        if (!std::isfinite(v)) {
            throw PreconditionViolated("generating entries must be finite");
        }
    }
    validate_sums(entries_, order_);
}

bool GeneratingVector::all_positive() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](double v) { return v > 0.0; });
}

bool GeneratingVector::all_negative() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](double v) { return v < 0.0; });
}

bool GeneratingVector::mixed_signs() const noexcept {
    return !all_positive() && !all_negative();
}

double GeneratingVector::max_abs_entry() const noexcept {
    double m = 0.0;
    for (double v : entries_) m = std::max(m, std::abs(v));
    return m;
}

double GeneratingVector::multiset_sum(std::span<const int> tuple) const {
    double s = 0.0;
    for (int idx : tuple) {
        if (idx < 0 || idx >= dimension()) {
            throw IndexOutOfRange("index out of range in multiset sum");
        }
        s += entries_[static_cast<std::size_t>(idx)];
    }
    return s;
}

GeneratingVector GeneratingVector::restricted_to(
    std::span<const int> subset) const {
    if (subset.empty()) {
        throw EmptySubset("subset of generating entries must be nonempty");
    }
    std::vector<double> picked;
    picked.reserve(subset.size());
    std::vector<bool> seen(entries_.size(), false);
    for (int idx : subset) {
        if (idx < 0 || idx >= dimension()) {
            throw IndexOutOfRange("subset index out of range");
        }
        if (seen[static_cast<std::size_t>(idx)]) {
            throw DuplicateIndex("subset indices must be distinct");
        }
        seen[static_cast<std::size_t>(idx)] = true;
        picked.push_back(entries_[static_cast<std::size_t>(idx)]);
    }
    return GeneratingVector(std::move(picked), order_);
}

}  // namespace cauchy
