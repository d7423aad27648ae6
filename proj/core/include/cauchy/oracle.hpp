#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cauchy/generating_vector.hpp"
#include "cauchy/symmetric_tensor.hpp"

// Independent reference computations used to audit the main code paths. None
// of these share evaluation strategy with the routines they check: the
// contractions loop over all ordered index tuples, the matrix eigensolver is
// a self-contained Jacobi rotation scheme, and the integral check reproduces
// T x^m through one-dimensional quadrature instead of multiset sums.
namespace cauchy::oracle {

struct QuadratureReport {
    double quadrature = 0.0;
    double reference = 0.0;  // apply_xm value
    double discrepancy = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool improper_mode = false;
    double grading_exponent = 2.0;
};

// Checks T x^m = integral over [0,1] of (sum_i x_i t^{c_i - 1/m})^m dt for
// positive c, by adaptive Simpson quadrature on the graded substitution
// t = s^k. Entries c_i <= 1/m make the raw integrand singular at 0; the
// probe then raises k until the substitution absorbs the singularity
// (improper mode, with reduced attainable accuracy). Throws
// QuadratureFailure when the error estimate cannot be pushed below quad_tol.
QuadratureReport integral_identity_check(const GeneratingVector& c,
                                         std::span<const double> x,
                                         double quad_tol = 1e-10);

struct SphereMinResult {
    double value = 0.0;
    std::vector<double> argmin;
    int restarts = 0;
    std::uint64_t seed = 0;
};

// Smallest value of T x^m over the unit 2-sphere found by multi-start
// projected gradient descent. On top of `restarts` random starts it always
// explores the axis directions, the normalized pairwise differences
// (e_i - e_j)/sqrt(2), and the uniform direction, so sign witnesses at those
// points are never missed. The result is an upper bound on the true minimum.
SphereMinResult sphere_min(const SymmetricTensor& t, int restarts = 64,
                           std::uint64_t seed = 42, int threads = 1);

// Literal contraction over all n^m ordered index tuples. Refuses when n^m
// exceeds tuple_budget.
double naive_apply_xm(const SymmetricTensor& t, std::span<const double> x,
                      double tuple_budget = 1e7);

// Literal first-slot contraction over all n^{m-1} ordered tuples per
// component.
std::vector<double> naive_apply_xm1(const SymmetricTensor& t,
                                    std::span<const double> x,
                                    double tuple_budget = 1e7);

struct DenseSpectrum {
    std::vector<double> eigenvalues;   // ascending
    std::vector<double> eigenvectors;  // column-major n*n, column k <-> eigenvalues[k]
    int sweeps = 0;
};

// Full spectrum of an order-2 tensor by cyclic Jacobi rotations. Kept free
// of any shared code with the power and descent methods it cross-checks.
DenseSpectrum dense_matrix_eig(const SymmetricTensor& t);

}  // namespace cauchy::oracle
