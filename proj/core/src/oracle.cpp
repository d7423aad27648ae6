#include "cauchy/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "cauchy/cauchy_builders.hpp"
#include "cauchy/parallel.hpp"
#include "cauchy/rng.hpp"
#include "descent.hpp"

namespace cauchy::oracle {

using detail::dot;
using detail::ipow;

namespace {

struct SimpsonState {
    std::function<double(double)> f;
    long evaluations = 0;
    double total_error = 0.0;
    CompensatedSum integral;
    bool failed = false;
    int max_depth = 44;

    double eval(double s) {
        ++evaluations;
        return f(s);
    }

    void recurse(double a, double b, double fa, double fm, double fb, double whole,
                 double tol, int depth) {
        const double mid = 0.5 * (a + b);
        const double lm = 0.5 * (a + mid);
        const double rm = 0.5 * (mid + b);
        const double flm = eval(lm);
        const double frm = eval(rm);
        const double left = (mid - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - mid) / 6.0 * (fm + 4.0 * frm + fb);
        const double err = (left + right - whole) / 15.0;
        if (depth >= max_depth || std::abs(err) <= tol) {
            integral.add(left + right + err);
            total_error += std::abs(err);
            if (depth >= max_depth && std::abs(err) > tol) failed = true;
            return;
        }
        recurse(a, mid, fa, flm, fm, left, 0.5 * tol, depth + 1);
        recurse(mid, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }
};

}  // namespace

QuadratureReport integral_identity_check(const GeneratingVector& c,
                                         std::span<const double> x,
                                         double quad_tol) {
    if (!c.all_positive()) {
        throw PreconditionViolated(
            "integral representation of T x^m needs c > 0");
    }
    const int n = c.dimension();
    const int m = c.order();
    if (static_cast<int>(x.size()) != n) {
        throw DimensionMismatch("vector length must equal tensor dimension");
    }
    const auto& e = c.entries();
    const double c_min = *std::min_element(e.begin(), e.end());
    const double inv_m = 1.0 / static_cast<double>(m);

    QuadratureReport report;
    report.improper_mode = (c_min <= inv_m);
    double k = 2.0;
    if (report.improper_mode) {
        // Raise the grading until the transformed integrand vanishes at 0:
        // the worst exponent k*m*c_min - 1 must stay >= 1.
        k = std::max(2.0, std::ceil(2.0 / (static_cast<double>(m) * c_min)));
    }
    report.grading_exponent = k;

    std::vector<double> graded_exp(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        graded_exp[static_cast<std::size_t>(i)] =
            k * (e[static_cast<std::size_t>(i)] - inv_m);
    }

    // Substitution t = s^k turns the identity into
    //   T x^m = integral over [0,1] of k s^{k-1} (sum_i x_i s^{k(c_i-1/m)})^m ds
    // whose integrand extends continuously by 0 at s = 0.
    SimpsonState state;
    state.f = [&](double s) -> double {
        if (s <= 0.0) return 0.0;
        double inner = 0.0;
        for (int i = 0; i < n; ++i) {
            inner += x[static_cast<std::size_t>(i)] *
                     std::pow(s, graded_exp[static_cast<std::size_t>(i)]);
        }
        return k * std::pow(s, k - 1.0) * ipow(inner, m);
    };

    const double fa = state.eval(0.0);
    const double fb = state.eval(1.0);
    const double fm = state.eval(0.5);
    const double whole = (fa + 4.0 * fm + fb) / 6.0;
    state.recurse(0.0, 1.0, fa, fm, fb, whole, quad_tol, 0);

    report.quadrature = state.integral.value();
    report.error_estimate = state.total_error;
    report.evaluations = state.evaluations;
    report.reference = build_cauchy(c).apply_xm(x);
    report.discrepancy = std::abs(report.quadrature - report.reference);
    if (state.failed) {
        std::ostringstream msg;
        msg << "adaptive quadrature stalled: error estimate "
            << report.error_estimate << " above tolerance " << quad_tol
            << " after maximum subdivision";
        throw QuadratureFailure(msg.str());
    }
    return report;
}

SphereMinResult sphere_min(const SymmetricTensor& t, int restarts,
                           std::uint64_t seed, int threads) {
    const int n = t.dimension();
    const int m = t.order();

    std::vector<std::vector<double>> starts;
    for (int i = 0; i < n; ++i) {
        std::vector<double> a(static_cast<std::size_t>(n), 0.0);
        a[static_cast<std::size_t>(i)] = 1.0;
        starts.push_back(a);
        if (m % 2 != 0) {
            a[static_cast<std::size_t>(i)] = -1.0;
            starts.push_back(a);
        }
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<double> d(static_cast<std::size_t>(n), 0.0);
            d[static_cast<std::size_t>(i)] = inv_sqrt2;
            d[static_cast<std::size_t>(j)] = -inv_sqrt2;
            starts.push_back(std::move(d));
        }
    }
    starts.emplace_back(static_cast<std::size_t>(n),
                        1.0 / std::sqrt(static_cast<double>(n)));
    for (int r = 0; r < restarts; ++r) {
        SplitMix64 rng(SplitMix64::derive(seed, static_cast<std::uint64_t>(r)));
        starts.push_back(random_unit_vector(rng, n));
    }

    const auto value = [&](std::span<const double> x) { return t.apply_xm(x); };
    const auto grad = [&](std::span<const double> x) {
        std::vector<double> g = t.apply_xm1(x);
        for (double& v : g) v *= static_cast<double>(m);
        return g;
    };

    std::vector<double> values(starts.size());
    std::vector<std::vector<double>> argmins(starts.size());
    parallel_for(static_cast<int>(starts.size()), threads, [&](int i) {
        auto res = detail::sphere_descent(starts[static_cast<std::size_t>(i)],
                                          value, grad, 1e-10, 1500);
        values[static_cast<std::size_t>(i)] = res.value;
        argmins[static_cast<std::size_t>(i)] = std::move(res.x);
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] < values[best]) best = i;
    }
    SphereMinResult result;
    result.value = values[best];
    result.argmin = argmins[best];
    result.restarts = static_cast<int>(starts.size());
    result.seed = seed;
    return result;
}

namespace {

void check_tuple_budget(int n, int m, double tuple_budget) {
    if (std::pow(static_cast<double>(n), m) > tuple_budget) {
        throw BudgetExceeded("ordered tuple count n^m exceeds the budget");
    }
}

// Odometer over ordered tuples in {0,...,n-1}^m.
bool advance_tuple(std::vector<int>& idx, int n) {
    for (int j = static_cast<int>(idx.size()) - 1; j >= 0; --j) {
        if (++idx[static_cast<std::size_t>(j)] < n) return true;
        idx[static_cast<std::size_t>(j)] = 0;
    }
    return false;
}

}  // namespace

double naive_apply_xm(const SymmetricTensor& t, std::span<const double> x,
                      double tuple_budget) {
    const int n = t.dimension();
    const int m = t.order();
    if (static_cast<int>(x.size()) != n) {
        throw DimensionMismatch("vector length must equal tensor dimension");
    }
    check_tuple_budget(n, m, tuple_budget);
    std::vector<int> idx(static_cast<std::size_t>(m), 0);
    double sum = 0.0;
    do {
        double prod = t.entry(idx);
        for (int j : idx) prod *= x[static_cast<std::size_t>(j)];
        sum += prod;
    } while (advance_tuple(idx, n));
    return sum;
}

std::vector<double> naive_apply_xm1(const SymmetricTensor& t,
                                    std::span<const double> x,
                                    double tuple_budget) {
    const int n = t.dimension();
    const int m = t.order();
    if (static_cast<int>(x.size()) != n) {
        throw DimensionMismatch("vector length must equal tensor dimension");
    }
    check_tuple_budget(n, m, tuple_budget);
    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    std::vector<int> idx(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < n; ++i) {
        idx.assign(static_cast<std::size_t>(m), 0);
        idx[0] = i;
        double sum = 0.0;
        // Sweep the trailing m-1 slots while the first stays pinned at i.
        for (;;) {
            double prod = t.entry(idx);
            for (std::size_t j = 1; j < idx.size(); ++j) {
                prod *= x[static_cast<std::size_t>(idx[j])];
            }
            sum += prod;
            int j = static_cast<int>(idx.size()) - 1;
            while (j >= 1 && idx[static_cast<std::size_t>(j)] == n - 1) {
                idx[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            if (j < 1) break;
            ++idx[static_cast<std::size_t>(j)];
        }
        out[static_cast<std::size_t>(i)] = sum;
    }
    return out;
}

DenseSpectrum dense_matrix_eig(const SymmetricTensor& t) {
    if (t.order() != 2) {
        throw OrderNotTwo("dense eigensolver handles order-2 tensors only");
    }
    const int n = t.dimension();
    const std::size_t un = static_cast<std::size_t>(n);
    std::vector<double> a(un * un);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int idx[2] = {i, j};
            a[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)] =
                t.entry(idx);
        }
    }
    std::vector<double> v(un * un, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * un +
                                  static_cast<std::size_t>(i)] = 1.0;

    double fro_sq = 0.0;
    for (double q : a) fro_sq += q * q;

    int sweep = 0;
    for (; sweep < 100; ++sweep) {
        double off_sq = 0.0;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[static_cast<std::size_t>(p) * un +
                                     static_cast<std::size_t>(q)];
                off_sq += apq * apq;
            }
        }
        if (off_sq <= 1e-30 * std::max(1.0, fro_sq)) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[static_cast<std::size_t>(p) * un +
                                     static_cast<std::size_t>(q)];
                if (apq == 0.0) continue;
                const double app = a[static_cast<std::size_t>(p) * un +
                                     static_cast<std::size_t>(p)];
                const double aqq = a[static_cast<std::size_t>(q) * un +
                                     static_cast<std::size_t>(q)];
                const double theta = (aqq - app) / (2.0 * apq);
                const double sign = theta >= 0.0 ? 1.0 : -1.0;
                const double tt =
                    sign / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double cs = 1.0 / std::sqrt(1.0 + tt * tt);
                const double sn = tt * cs;
                for (int r = 0; r < n; ++r) {
                    const std::size_t rp =
                        static_cast<std::size_t>(r) * un + static_cast<std::size_t>(p);
                    const std::size_t rq =
                        static_cast<std::size_t>(r) * un + static_cast<std::size_t>(q);
                    const double arp = a[rp];
                    const double arq = a[rq];
                    a[rp] = cs * arp - sn * arq;
                    a[rq] = sn * arp + cs * arq;
                }
                for (int r = 0; r < n; ++r) {
                    const std::size_t pr =
                        static_cast<std::size_t>(p) * un + static_cast<std::size_t>(r);
                    const std::size_t qr =
                        static_cast<std::size_t>(q) * un + static_cast<std::size_t>(r);
                    const double apr = a[pr];
                    const double aqr = a[qr];
                    a[pr] = cs * apr - sn * aqr;
                    a[qr] = sn * apr + cs * aqr;
                }
                for (int r = 0; r < n; ++r) {
                    const std::size_t rp =
                        static_cast<std::size_t>(r) * un + static_cast<std::size_t>(p);
                    const std::size_t rq =
                        static_cast<std::size_t>(r) * un + static_cast<std::size_t>(q);
                    const double vrp = v[rp];
                    const double vrq = v[rq];
                    v[rp] = cs * vrp - sn * vrq;
                    v[rq] = sn * vrp + cs * vrq;
                }
            }
        }
    }

    std::vector<int> order(un);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int p, int q) {
        return a[static_cast<std::size_t>(p) * un + static_cast<std::size_t>(p)] <
               a[static_cast<std::size_t>(q) * un + static_cast<std::size_t>(q)];
    });

    DenseSpectrum spectrum;
    spectrum.sweeps = sweep;
    spectrum.eigenvalues.resize(un);
    spectrum.eigenvectors.resize(un * un);
    for (int k = 0; k < n; ++k) {
        const int col = order[static_cast<std::size_t>(k)];
        spectrum.eigenvalues[static_cast<std::size_t>(k)] =
            a[static_cast<std::size_t>(col) * un + static_cast<std::size_t>(col)];
        for (int r = 0; r < n; ++r) {
            spectrum.eigenvectors[static_cast<std::size_t>(k) * un +
                                  static_cast<std::size_t>(r)] =
                v[static_cast<std::size_t>(r) * un + static_cast<std::size_t>(col)];
        }
    }
    return spectrum;
}

}  // namespace cauchy::oracle
