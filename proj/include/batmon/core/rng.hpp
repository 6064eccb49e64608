#pragma once

#include <cmath>
#include <cstdint>

#include "batmon/core/linalg.hpp"
#include "batmon/core/types.hpp"

namespace batmon {

/// SplitMix64 generator (Steele, Lea & Flood; the finalizer used by Java's
/// SplittableRandom) with a Marsaglia-polar Gaussian transform. Chosen over
/// std::normal_distribution because the whole draw path is specified here,
/// so sequences are reproducible bit-for-bit for a given seed and call
/// order. One instance per run; never share across threads.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal deviate; the polar method yields pairs, the second
    /// of which is cached for the next call.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double r = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * r;
        have_spare_ = true;
        return u * r;
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Draw from N(mean, cov). Factorizes cov on every call; propagates
/// NotPositiveSemidefinite. Always consumes exactly mean.size() deviates so
/// the stream position is independent of cov.
inline VectorXd gaussian_sample(Rng& rng, const VectorXd& mean,
                                const MatrixXd& cov) {
    const MatrixXd lower = cholesky_factor(cov);
    VectorXd g(mean.size());
    for (Eigen::Index i = 0; i < g.size(); ++i) {
        g(i) = rng.gaussian();
    }
    return mean + lower * g;
}

}  // namespace batmon
