#include "cauchy/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cauchy/cauchy_builders.hpp"
#include "cauchy/definiteness.hpp"
#include "cauchy/parallel.hpp"
#include "cauchy/rng.hpp"
#include "descent.hpp"

namespace cauchy {

using detail::dot;
using detail::ipow;
using detail::norm2;

NoConvergence::NoConvergence(const std::string& msg, SpectralPair best)
    : Error(msg), best_(std::move(best)) {}

namespace {

std::vector<double> power_each(std::span<const double> x, int k) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = ipow(x[i], k);
    return out;
}

double residual_h(const std::vector<double>& y, double lambda,
                  std::span<const double> x, int m) {
    double s = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double d = y[i] - lambda * ipow(x[i], m - 1);
        s += d * d;
    }
    return std::sqrt(s);
}

double residual_z(const std::vector<double>& y, double lambda,
                  std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double d = y[i] - lambda * x[i];
        s += d * d;
    }
    return std::sqrt(s);
}

// Rescales y onto the level set sum x_i^m = 1 (even m). Returns false when y
// is numerically zero.
bool retract_level_set(std::vector<double>& y, int m) {
    double s = 0.0;
    for (double v : y) s += ipow(v, m);
    if (!(s > 1e-300)) return false;
    const double scale = std::pow(s, 1.0 / static_cast<double>(m));
    for (double& v : y) v /= scale;
    return true;
}

struct LevelDescentOutcome {
    std::vector<double> x;
    double lambda = 0.0;
    double residual = std::numeric_limits<double>::infinity();
    int iterations = 0;
    bool converged = false;
    bool usable = false;
};

// Minimizes dir * T x^m over the level set sum x_i^m = 1 by projected
// gradient steps with backtracking; dir = -1 maximizes. Stationary points
// satisfy T x^{m-1} = lambda x^{[m-1]} with lambda = T x^m.
LevelDescentOutcome level_set_descent(const SymmetricTensor& t,
                                      std::vector<double> x, double dir,
                                      double tol, int max_iter) {
    const int m = t.order();
    LevelDescentOutcome out;
    if (!retract_level_set(x, m)) return out;
    out.usable = true;

    double f = t.apply_xm(x);
    double step = 1.0;
    int it = 0;
    for (; it < max_iter; ++it) {
        const std::vector<double> y = t.apply_xm1(x);
        const double lambda = dot(y, x);
        out.residual = residual_h(y, lambda, x, m);
        if (out.residual <= tol) {
            out.converged = true;
            break;
        }
        // Euclidean gradient of dir*f is dir*m*y; the constraint normal is
        // m*x^{[m-1]}. The common factor m cancels in the projection.
        const std::vector<double> normal = power_each(x, m - 1);
        const double nn = dot(normal, normal);
        const double yn = dot(y, normal);
        std::vector<double> d(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            d[i] = dir * (y[i] - yn / nn * normal[i]);
        }
        const double dn = norm2(d);
        if (dn <= 1e-305) break;

        bool moved = false;
        double alpha = step;
        for (int bt = 0; bt < 60; ++bt) {
            std::vector<double> trial(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) {
                trial[i] = x[i] - alpha * d[i];
            }
            if (retract_level_set(trial, m)) {
                const double ft = t.apply_xm(trial);
                if (dir * ft <= dir * f - 1e-4 * alpha * dn * dn) {
                    x = std::move(trial);
                    f = ft;
                    step = alpha * 2.0;
                    moved = true;
                    break;
                }
            }
            alpha *= 0.5;
        }
        if (!moved) break;
    }
    out.lambda = f;
    out.iterations = it;
    out.x = std::move(x);
    return out;
}

// Deterministic starts shared by the variational searches: axis directions,
// pairwise differences, and the uniform direction, each on the level set.
std::vector<std::vector<double>> level_set_seeds(int n, int m) {
    std::vector<std::vector<double>> seeds;
    const double pair_scale = std::pow(2.0, -1.0 / static_cast<double>(m));
    for (int i = 0; i < n; ++i) {
        std::vector<double> e(static_cast<std::size_t>(n), 0.0);
        e[static_cast<std::size_t>(i)] = 1.0;
        seeds.push_back(e);
        e[static_cast<std::size_t>(i)] = -1.0;
        seeds.push_back(std::move(e));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<double> d(static_cast<std::size_t>(n), 0.0);
            d[static_cast<std::size_t>(i)] = pair_scale;
            d[static_cast<std::size_t>(j)] = -pair_scale;
            seeds.push_back(std::move(d));
        }
    }
    seeds.emplace_back(static_cast<std::size_t>(n),
                       std::pow(static_cast<double>(n),
                                -1.0 / static_cast<double>(m)));
    return seeds;
}

SpectralPair h_lambda_variational(const GeneratingVector& c, double dir,
                                  const VariationalOptions& opts) {
    if (c.order() % 2 != 0) {
        throw OddOrderUnsupported(
            "variational H-eigenvalue search needs even order");
    }
    const SymmetricTensor t = build_cauchy(c);
    const int n = c.dimension();
    const int m = c.order();

    std::vector<std::vector<double>> starts = level_set_seeds(n, m);
    const std::size_t deterministic = starts.size();
    for (int r = 0; r < opts.restarts; ++r) {
        SplitMix64 rng(SplitMix64::derive(opts.seed, static_cast<std::uint64_t>(r)));
        starts.push_back(random_unit_vector(rng, n));
    }
    std::vector<LevelDescentOutcome> outcomes(starts.size());
    parallel_for(static_cast<int>(starts.size()), opts.threads, [&](int i) {
        outcomes[static_cast<std::size_t>(i)] =
            level_set_descent(t, starts[static_cast<std::size_t>(i)], dir,
                              opts.tol, opts.max_iter);
    });

    int best = -1;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (!outcomes[i].usable) continue;
        if (best < 0 ||
            dir * outcomes[i].lambda <
                dir * outcomes[static_cast<std::size_t>(best)].lambda) {
            best = static_cast<int>(i);
        }
    }
    if (best < 0) {
        throw NoConvergence("no usable descent start on the level set", {});
    }
    const auto& o = outcomes[static_cast<std::size_t>(best)];
    SpectralPair pair;
    pair.kind = EigKind::H;
    pair.lambda = o.lambda;
    pair.x = o.x;
    pair.residual = o.residual;
    pair.iterations = o.iterations;
    pair.converged = o.converged;
    (void)deterministic;
    return pair;
}

}  // namespace

SpectralPair h_eigen_max(const GeneratingVector& c, const PowerOptions& opts) {
    if (!c.all_positive()) {
        throw NotPositiveVector(
            "power iteration for the largest H-eigenvalue needs c > 0");
    }
    const SymmetricTensor t = build_cauchy(c);
    const int n = c.dimension();
    const int m = c.order();

    std::vector<double> x(static_cast<std::size_t>(n),
                          std::pow(static_cast<double>(n),
                                   -1.0 / static_cast<double>(m)));
    double lambda_prev = std::numeric_limits<double>::quiet_NaN();
    SpectralPair pair;
    pair.kind = EigKind::H;
    for (int it = 1; it <= opts.max_iter; ++it) {
        const std::vector<double> y = t.apply_xm1(x);
        const double lambda = dot(y, x);
        const double res = residual_h(y, lambda, x, m);
        pair.lambda = lambda;
        pair.x = x;
        pair.residual = res;
        pair.iterations = it;
        if (std::abs(lambda - lambda_prev) <= opts.tol * (1.0 + std::abs(lambda)) &&
            res <= opts.tol) {
            pair.converged = true;
            return pair;
        }
        lambda_prev = lambda;
        std::vector<double> z(static_cast<std::size_t>(n));
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            z[static_cast<std::size_t>(i)] =
                std::pow(y[static_cast<std::size_t>(i)],
                         1.0 / static_cast<double>(m - 1));
            s += ipow(z[static_cast<std::size_t>(i)], m);
        }
        const double scale = std::pow(s, 1.0 / static_cast<double>(m));
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] =
            z[static_cast<std::size_t>(i)] / scale;
    }
    std::ostringstream msg;
    msg << "power iteration did not meet tol " << opts.tol << " within "
        << opts.max_iter << " iterations";
    throw NoConvergence(msg.str(), pair);
}

SpectralPair h_lambda_min_variational(const GeneratingVector& c,
                                      const VariationalOptions& opts) {
    return h_lambda_variational(c, +1.0, opts);
}

SpectralPair h_lambda_max_variational(const GeneratingVector& c,
                                      const VariationalOptions& opts) {
    return h_lambda_variational(c, -1.0, opts);
}

BoundsReport bounds(const GeneratingVector& c, double term_budget) {
    BoundsReport report;
    const int m = c.order();
    const bool even = (m % 2 == 0);

    if (!even) {
        report.lemma31.reason =
            "needs even order for the level-set eigenvalue characterization";
        report.thm31.reason = "needs even order";
    }
    if (even && c.mixed_signs()) {
        double max_neg = -std::numeric_limits<double>::infinity();
        double min_pos = std::numeric_limits<double>::infinity();
        for (double v : c.entries()) {
            if (v < 0.0) max_neg = std::max(max_neg, v);
            if (v > 0.0) min_pos = std::min(min_pos, v);
        }
        report.lemma31.applicable = true;
        report.lemma31.reason = "mixed-sign entries";
        report.lemma31_lower_cap = 1.0 / (static_cast<double>(m) * max_neg);
        report.lemma31_upper_floor = 1.0 / (static_cast<double>(m) * min_pos);
    } else if (even) {
        report.lemma31.reason = "entries do not mix signs";
    }

    if (even && c.all_positive()) {
        const auto& e = c.entries();
        const bool has_distinct =
            std::any_of(e.begin(), e.end(), [&](double v) { return v != e[0]; });
        if (has_distinct) {
            const RowSumProfile profile = row_sum_profile(c, term_budget);
            const double R = profile.max_row_sum;
            const double r = profile.min_row_sum;
            const double a_bar = profile.max_entry;
            const double scale = 1.0 / (static_cast<double>(m) * a_bar);
            report.thm31.applicable = true;
            report.thm31.reason = "c > 0 with at least two distinct entries";
            report.thm31_lower = r + scale * (std::sqrt(R / r) - 1.0);
            report.thm31_upper = R - scale * (1.0 - std::sqrt(r / R));
        } else if (even) {
            report.thm31.reason =
                "all entries equal: the largest H-eigenvalue is exactly "
                "n^{m-1}/(m c_1)";
        }
    } else if (even) {
        report.thm31.reason = "needs c > 0";
    }
    return report;
}

namespace {

double default_shift(const SymmetricTensor& t) {
    double s = 1.0;
    for (std::size_t pos = 0; pos < t.canonical_size(); ++pos) {
        s += t.weight_at(pos) * std::abs(t.value_at(pos));
    }
    return s;
}

// Canonical sign for even order, where (lambda, x) and (lambda, -x) are the
// same pair: make the largest-magnitude component positive.
void canonicalize_sign(std::vector<double>& x) {
    std::size_t lead = 0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (std::abs(x[i]) > std::abs(x[lead])) lead = i;
    }
    if (x[lead] < 0.0) {
        for (double& v : x) v = -v;
    }
}

double pair_angle(std::span<const double> a, std::span<const double> b,
                  bool sign_free) {
    double d = dot(a, b);
    if (sign_free) d = std::abs(d);
    d = std::clamp(d, -1.0, 1.0);
    return std::acos(d);
}

}  // namespace

ZSearchResult z_eigen_search(const GeneratingVector& c,
                             const ZSearchOptions& opts) {
    const SymmetricTensor t = build_cauchy(c);
    const int n = c.dimension();
    const int m = c.order();
    const double alpha = opts.shift.value_or(default_shift(t));

    ZSearchResult result;
    result.shift_used = alpha;
    result.attempts = 2 * opts.restarts;

    std::vector<SpectralPair> found(static_cast<std::size_t>(result.attempts));
    parallel_for(result.attempts, opts.threads, [&](int attempt) {
        const bool descent = (attempt % 2 != 0);
        SplitMix64 rng(
            SplitMix64::derive(opts.seed, static_cast<std::uint64_t>(attempt)));
        std::vector<double> x = random_unit_vector(rng, n);
        // Even order: alternate the shifted update between ascent and
        // descent. Odd order: the descent basin is the ascent basin of the
        // mirrored pair (lambda, x) -> (-lambda, -x), so negate the start
        // instead; the flipped update would only oscillate.
        double pol = 1.0;
        if (descent) {
            if (m % 2 == 0) {
                pol = -1.0;
            } else {
                for (double& v : x) v = -v;
            }
        }

        SpectralPair pair;
        pair.kind = EigKind::Z;
        double lambda_prev = std::numeric_limits<double>::quiet_NaN();
        for (int it = 1; it <= opts.max_iter; ++it) {
            const std::vector<double> y = t.apply_xm1(x);
            const double lambda = dot(y, x);
            const double res = residual_z(y, lambda, x);
            pair.lambda = lambda;
            pair.x = x;
            pair.residual = res;
            pair.iterations = it;
            if (std::abs(lambda - lambda_prev) <=
                    opts.tol * (1.0 + std::abs(lambda)) &&
                res <= opts.tol) {
                pair.converged = true;
                break;
            }
            lambda_prev = lambda;
            std::vector<double> w(static_cast<std::size_t>(n));
            double nw = 0.0;
            for (int i = 0; i < n; ++i) {
                w[static_cast<std::size_t>(i)] =
                    y[static_cast<std::size_t>(i)] +
                    pol * alpha * x[static_cast<std::size_t>(i)];
                nw += w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
            }
            nw = std::sqrt(nw);
            if (!(nw > 1e-300)) break;
            for (int i = 0; i < n; ++i) {
                x[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] / nw;
            }
        }
        found[static_cast<std::size_t>(attempt)] = std::move(pair);
    });

    const bool sign_free = (m % 2 == 0);
    std::vector<SpectralPair> kept;
    for (auto& pair : found) {
        if (!pair.converged) {
            ++result.dropped;
            continue;
        }
        if (sign_free) canonicalize_sign(pair.x);
        kept.push_back(std::move(pair));
    }
    std::sort(kept.begin(), kept.end(),
              [](const SpectralPair& a, const SpectralPair& b) {
                  if (a.lambda != b.lambda) return a.lambda < b.lambda;
                  return std::lexicographical_compare(a.x.begin(), a.x.end(),
                                                      b.x.begin(), b.x.end());
              });
    for (const auto& pair : kept) {
        bool dup = false;
        for (const auto& have : result.pairs) {
            if (std::abs(have.lambda - pair.lambda) <= 1e-6 &&
                pair_angle(have.x, pair.x, sign_free) < 1e-3) {
                dup = true;
                break;
            }
        }
        if (!dup) result.pairs.push_back(pair);
    }
    return result;
}

SignAuditReport odd_sign_audit(std::span<const SpectralPair> pairs,
                               const GeneratingVector& c, double tol_sign) {
    if (c.order() % 2 == 0) {
        throw PreconditionViolated("sign audit applies to odd order only");
    }
    if (!c.all_positive()) {
        throw PreconditionViolated("sign audit needs c > 0");
    }
    SignAuditReport report;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& pair = pairs[k];
        if (pair.kind != EigKind::Z) {
            throw PreconditionViolated("sign audit expects Z-eigenpairs");
        }
        if (std::abs(pair.lambda) <= tol_sign) {
            ++report.indeterminate;
            continue;
        }
        ++report.audited;
        bool bad = false;
        if (pair.lambda > 0.0) {
            for (double v : pair.x) {
                if (v < -tol_sign) bad = true;
            }
        } else {
            for (double v : pair.x) {
                if (v > tol_sign) bad = true;
            }
        }
        if (bad) {
            ++report.violations;
            report.violating_pairs.push_back(static_cast<int>(k));
        }
    }
    return report;
}

ZeroExclusionReport zero_z_exclusion_probe(const GeneratingVector& c,
                                           int restarts, std::uint64_t seed,
                                           int threads) {
    const int m = c.order();
    const int n = c.dimension();
    if (m % 2 == 0) {
        throw PreconditionViolated("zero-exclusion probe applies to odd order");
    }
    if (!c.all_positive()) {
        throw PreconditionViolated("zero-exclusion probe needs c > 0");
    }
    const auto& e = c.entries();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (e[static_cast<std::size_t>(i)] == e[static_cast<std::size_t>(j)]) {
                std::ostringstream msg;
                msg << "duplicate generating entries at (" << i + 1 << ", "
                    << j + 1 << "): T x^{m-1} vanishes at x = (e_" << i + 1
                    << " - e_" << j + 1 << ")/sqrt(2)";
                throw PreconditionViolated(msg.str());
            }
        }
    }
    const SymmetricTensor t = build_cauchy(c);

    const auto value = [&](std::span<const double> x) {
        const std::vector<double> g = t.apply_xm1(x);
        return dot(g, g);
    };
    const auto grad = [&](std::span<const double> x) {
        const std::vector<double> g = t.apply_xm1(x);
        const std::vector<double> jac = t.contract_matrix(x);
        std::vector<double> out(static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) {
                s += jac[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                         static_cast<std::size_t>(j)] *
                     g[static_cast<std::size_t>(j)];
            }
            out[static_cast<std::size_t>(i)] =
                2.0 * static_cast<double>(m - 1) * s;
        }
        return out;
    };

    std::vector<std::vector<double>> starts;
    for (int i = 0; i < n; ++i) {
        std::vector<double> a(static_cast<std::size_t>(n), 0.0);
        a[static_cast<std::size_t>(i)] = 1.0;
        starts.push_back(a);
        a[static_cast<std::size_t>(i)] = -1.0;
        starts.push_back(std::move(a));
    }
    for (int r = 0; r < restarts; ++r) {
        SplitMix64 rng(SplitMix64::derive(seed, static_cast<std::uint64_t>(r)));
        starts.push_back(random_unit_vector(rng, n));
    }

    std::vector<double> values(starts.size());
    std::vector<std::vector<double>> argmins(starts.size());
    parallel_for(static_cast<int>(starts.size()), threads, [&](int i) {
        auto res = detail::sphere_descent(starts[static_cast<std::size_t>(i)],
                                          value, grad, 1e-12, 2000);
        values[static_cast<std::size_t>(i)] = res.value;
        argmins[static_cast<std::size_t>(i)] = std::move(res.x);
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] < values[best]) best = i;
    }
    ZeroExclusionReport report;
    report.floor = std::sqrt(std::max(0.0, values[best]));
    report.argmin = argmins[best];
    report.restarts = static_cast<int>(starts.size());
    report.seed = seed;
    return report;
}

}  // namespace cauchy
