#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <vector>

// Shared projected-gradient machinery for the sphere and level-set searches.
// Internal to the library sources.
namespace cauchy::detail {

inline double ipow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

inline void normalize2(std::vector<double>& a) {
    const double n = norm2(a);
    if (n > 0.0) {
        for (double& v : a) v /= n;
    }
}

struct DescentResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool stationary = false;
};

// Minimizes `value` over the unit 2-sphere by projected gradient steps with
// Armijo backtracking and renormalization. Stops when the tangent gradient
// shrinks below tol * (1 + |f|) or no decreasing step remains.
inline DescentResult sphere_descent(
    std::vector<double> x, const std::function<double(std::span<const double>)>& value,
    const std::function<std::vector<double>(std::span<const double>)>& grad,
    double tol, int max_iter) {
    normalize2(x);
    DescentResult res;
    double f = value(x);
    double step = 1.0;
    int it = 0;
    for (; it < max_iter; ++it) {
        std::vector<double> g = grad(x);
        const double gx = dot(g, x);
        for (std::size_t i = 0; i < g.size(); ++i) g[i] -= gx * x[i];
        const double gn = norm2(g);
        if (gn <= tol * (1.0 + std::abs(f))) {
            res.stationary = true;
            break;
        }
        bool moved = false;
        double alpha = step;
        for (int bt = 0; bt < 60; ++bt) {
            std::vector<double> trial(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] - alpha * g[i];
            normalize2(trial);
            const double ft = value(trial);
            if (ft <= f - 1e-4 * alpha * gn * gn) {
                x = std::move(trial);
                f = ft;
                step = alpha * 2.0;
                moved = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!moved) {
            res.stationary = true;
            break;
        }
    }
    res.x = std::move(x);
    res.value = f;
    res.iterations = it;
    return res;
}

}  // namespace cauchy::detail
