#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cauchy {

// Exact binomial coefficient; 0 when b < 0 or b > a. Arguments must stay
// small enough that the result fits in 64 bits (a <= 64 in this library).
std::uint64_t binomial(int a, int b);

// Number of size-m multisets over {0,...,n-1}: C(n+m-1, m).
std::uint64_t multiset_count(int n, int m);

// Number of distinct orderings m!/prod(k_i!) of a sorted index tuple, where
// the k_i are the run lengths of repeated values. Exact for the orders this
// library accepts.
double multinomial_weight(std::span<const int> sorted_tuple);

// Lexicographic position of a sorted tuple among all size-m multisets over
// {0,...,n-1}. The tuple must be non-decreasing with values in range.
std::size_t multiset_rank(std::span<const int> sorted_tuple, int n);

// Walks sorted index tuples in lexicographic order starting at (0,...,0).
// position() advances 0,1,2,... in lockstep with multiset_rank.
class MultisetCursor {
public:
    MultisetCursor(int n, int m);

    bool valid() const noexcept { return valid_; }
    std::span<const int> tuple() const noexcept { return tuple_; }
    std::size_t position() const noexcept { return pos_; }
    void advance();

private:
    int n_;
    std::vector<int> tuple_;
    std::size_t pos_ = 0;
    bool valid_ = false;
};

}  // namespace cauchy
