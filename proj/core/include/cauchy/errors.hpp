#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cauchy {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// A multiset of generating-vector indices sums to zero, so the entry
// 1/(c_{i1}+...+c_{im}) is undefined. Indices are stored 0-based; messages
// render them 1-based like all user-facing output.
class ZeroMultisetSum : public Error {
public:
    explicit ZeroMultisetSum(std::vector<int> indices);
    const std::vector<int>& indices() const noexcept { return indices_; }

private:
    std::vector<int> indices_;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class EmptySubset : public Error {
public:
    using Error::Error;
};

class DuplicateIndex : public Error {
public:
    using Error::Error;
};

class EmptyList : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class NotPositiveVector : public Error {
public:
    using Error::Error;
};

class OddOrderUnsupported : public Error {
public:
    using Error::Error;
};

class OrderNotTwo : public Error {
public:
    using Error::Error;
};

class QuadratureFailure : public Error {
public:
    using Error::Error;
};

// Renders "(i1, i2, ...)" with 1-based indices, matching report output.
std::string format_indices_one_based(const std::vector<int>& indices);

}  // namespace cauchy
