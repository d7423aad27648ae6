#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace cauchy {

// splitmix64 generator. Deterministic across platforms and cheap to seed per
// work item, which keeps multi-threaded restart loops reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double gaussian() {
        double u = 1.0 - uniform();  // (0, 1]
        double v = uniform();
        return std::sqrt(-2.0 * std::log(u)) *
               std::cos(6.283185307179586476925286766559 * v);
    }

    // Independent stream for work item `stream` under a caller-level seed.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 g(seed ^ (0xA0761D6478BD642FULL * (stream + 1)));
        return g.next();
    }

private:
    std::uint64_t state_;
};

inline std::vector<double> random_unit_vector(SplitMix64& rng, int n) {
    std::vector<double> x(static_cast<std::size_t>(n));
    for (;;) {
        double norm_sq = 0.0;
        for (double& v : x) {
            v = rng.gaussian();
            norm_sq += v * v;
        }
        if (norm_sq > 1e-12) {
            const double inv = 1.0 / std::sqrt(norm_sq);
            for (double& v : x) v *= inv;
            return x;
        }
    }
}

// Neumaier compensated accumulator for long reciprocal sums.
class CompensatedSum {
public:
    void add(double v) {
        double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace cauchy
