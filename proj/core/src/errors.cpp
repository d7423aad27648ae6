#include "cauchy/errors.hpp"

#include <sstream>

namespace cauchy {

std::string format_indices_one_based(const std::vector<int>& indices) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) out << ", ";
        out << indices[i] + 1;
    }
    out << ')';
    return out.str();
}

namespace {

std::string zero_sum_message(const std::vector<int>& indices) {
    return "multiset sum of generating entries vanishes at indices " +
           format_indices_one_based(indices);
}

}  // namespace

ZeroMultisetSum::ZeroMultisetSum(std::vector<int> indices)
    : Error(zero_sum_message(indices)), indices_(std::move(indices)) {}

}  // namespace cauchy
