#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cauchy/errors.hpp"
#include "cauchy/generating_vector.hpp"
#include "cauchy/symmetric_tensor.hpp"

namespace cauchy {

enum class EigKind { H, Z };

// One eigenpair candidate. H-pairs solve T x^{m-1} = lambda x^{[m-1]} and are
// normalized to sum x_i^m = 1; Z-pairs solve T x^{m-1} = lambda x with
// |x|_2 = 1. residual is the 2-norm of the defining equation at (lambda, x).
struct SpectralPair {
    EigKind kind = EigKind::H;
    double lambda = 0.0;
    std::vector<double> x;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

class NoConvergence : public Error {
public:
    NoConvergence(const std::string& msg, SpectralPair best);
    const SpectralPair& best() const noexcept { return best_; }

private:
    SpectralPair best_;
};

struct PowerOptions {
    double tol = 1e-10;
    int max_iter = 5000;
};

// Largest H-eigenvalue of the Cauchy tensor of a positive generating vector,
// by normalized power iteration x <- (T x^{m-1})^{[1/(m-1)]} rescaled to the
// level set sum x_i^m = 1. The entrywise positive tensor keeps the iterate
// positive, and the limit is the spectral radius with a positive eigenvector.
SpectralPair h_eigen_max(const GeneratingVector& c, const PowerOptions& = {});

struct VariationalOptions {
    int restarts = 32;
    std::uint64_t seed = 42;
    double tol = 1e-8;
    int max_iter = 4000;
    int threads = 1;
};

// Smallest (resp. largest) value of T x^m over the level set sum x_i^m = 1,
// located by multi-start projected gradient descent. Stationary points of
// that problem are H-eigenpairs, so the result is reported as one. The value
// is a heuristic global extreme: restarts can miss basins. Even order only.
SpectralPair h_lambda_min_variational(const GeneratingVector& c,
                                      const VariationalOptions& = {});
SpectralPair h_lambda_max_variational(const GeneratingVector& c,
                                      const VariationalOptions& = {});

struct TheoremApplicability {
    bool applicable = false;
    std::string reason;
};

// lemma31_*: for mixed-sign c (even m), the extreme H-eigenvalues are pinned
// by axis evaluations: lambda_min <= 1/(m max{c_i<0}) and
// lambda_max >= 1/(m min{c_i>0}).
// thm31_*: for positive c with at least two distinct entries (even m), a
// strict bracket for lambda_max from the extreme row sums R and r:
//   r + (sqrt(R/r)-1)/(m a_bar) < lambda_max < R - (1-sqrt(r/R))/(m a_bar).
struct BoundsReport {
    std::optional<double> lemma31_lower_cap;
    std::optional<double> lemma31_upper_floor;
    std::optional<double> thm31_lower;
    std::optional<double> thm31_upper;
    TheoremApplicability lemma31;
    TheoremApplicability thm31;
};

BoundsReport bounds(const GeneratingVector& c, double term_budget = 1e8);

struct ZSearchOptions {
    // Shift magnitude for the fixed-point iteration; defaults to
    // 1 + sum of |entry| * multiplicity, which dominates |T x^m| on the
    // sphere. Each restart runs both shift polarities.
    std::optional<double> shift;
    int restarts = 16;
    std::uint64_t seed = 42;
    double tol = 1e-10;
    int max_iter = 5000;
    int threads = 1;
};

struct ZSearchResult {
    std::vector<SpectralPair> pairs;  // deduplicated, sorted by (lambda, x)
    int attempts = 0;
    int dropped = 0;  // restarts that did not converge
    double shift_used = 0.0;
};

// Z-eigenpair search by shifted symmetric power iteration from random unit
// starts. Finds a deterministic (seeded) set of pairs; the list need not be
// the complete Z-spectrum.
ZSearchResult z_eigen_search(const GeneratingVector& c,
                             const ZSearchOptions& = {});

struct SignAuditReport {
    int audited = 0;
    int violations = 0;
    int indeterminate = 0;           // |lambda| <= tol_sign
    std::vector<int> violating_pairs;  // indices into the audited list
};

// For odd order and positive c, every Z-eigenvector must be entrywise >= 0
// when lambda > 0 and <= 0 when lambda < 0. Checks that sign pattern on the
// given pairs.
SignAuditReport odd_sign_audit(std::span<const SpectralPair> pairs,
                               const GeneratingVector& c,
                               double tol_sign = 1e-8);

struct ZeroExclusionReport {
    double floor = 0.0;  // smallest |T x^{m-1}|_2 found on the unit sphere
    std::vector<double> argmin;
    int restarts = 0;
    std::uint64_t seed = 0;
};

// For odd order and positive, mutually distinct c, zero is not a
// Z-eigenvalue: |T x^{m-1}| stays bounded away from 0 on the sphere. The
// probe minimizes that norm from many starts and reports the floor reached.
// Duplicated entries fail the precondition since x = (e_i - e_j)/sqrt(2)
// then gives T x^{m-1} = 0 exactly.
ZeroExclusionReport zero_z_exclusion_probe(const GeneratingVector& c,
                                           int restarts, std::uint64_t seed,
                                           int threads = 1);

}  // namespace cauchy
