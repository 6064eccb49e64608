#include "batmon/estimators/particle.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace batmon::pf {

ParticleSet initialize(const VectorXd& mean, const MatrixXd& cov,
                       Eigen::Index count, Rng& rng) {
    ParticleSet set;
    set.particles.resize(mean.size(), count);
    set.weights = VectorXd::Constant(count, 1.0 / static_cast<double>(count));
    const MatrixXd root = cholesky_factor(cov);
    VectorXd g(mean.size());
    for (Eigen::Index i = 0; i < count; ++i) {
        for (Eigen::Index k = 0; k < g.size(); ++k) {
            g(k) = rng.gaussian();
        }
        set.particles.col(i) = mean + root * g;
    }
    return set;
}

double effective_particles(const VectorXd& weights) {
    return 1.0 / weights.squaredNorm();
}

std::vector<Eigen::Index> systematic_resample_indices(const VectorXd& weights,
                                                      Rng& rng) {
    const Eigen::Index n = weights.size();
    std::vector<Eigen::Index> indices(static_cast<std::size_t>(n));
    const double start = rng.uniform01() / static_cast<double>(n);
    double cumulative = weights(0);
    Eigen::Index j = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double position =
            start + static_cast<double>(i) / static_cast<double>(n);
        while (cumulative < position && j + 1 < n) {
            ++j;
            cumulative += weights(j);
        }
        indices[static_cast<std::size_t>(i)] = j;
    }
    return indices;
}

StepResult step(ParticleSet& set, const FilterModel& model, double input,
                const MatrixXd& process_noise_root, const MatrixXd& r_inv,
                const VectorXd& z, double resample_fraction, Rng& rng) {
    const Eigen::Index n = set.count();
    const Eigen::Index d = set.particles.rows();
    const Eigen::Index m = model.measurement_map.rows();

    // Bootstrap proposal: transition prior, so the weight update reduces to
    // the measurement likelihood.
    VectorXd noise(d);
    VectorXd log_like(n);
    VectorXd z_pred_mean = VectorXd::Zero(m);
    VectorXd residual(m);
    for (Eigen::Index i = 0; i < n; ++i) {
        VectorXd x = model.transition(set.particles.col(i), input);
        for (Eigen::Index k = 0; k < d; ++k) {
            noise(k) = rng.gaussian();
        }
        x += process_noise_root * noise;
        set.particles.col(i) = x;

        residual.noalias() = z - model.measurement_map * x;
        log_like(i) = -0.5 * residual.dot(r_inv * residual);
        z_pred_mean.noalias() +=
            set.weights(i) * (model.measurement_map * x);
    }

    StepResult out;
    out.innovation = z - z_pred_mean;

    const double peak = log_like.maxCoeff();
    double total = 0.0;
    if (std::isfinite(peak)) {
        for (Eigen::Index i = 0; i < n; ++i) {
            set.weights(i) *= std::exp(log_like(i) - peak);
            total += set.weights(i);
        }
    }
    if (!(total > 0.0) || !std::isfinite(total)) {
        set.weights.setConstant(1.0 / static_cast<double>(n));
        out.weight_collapse = true;
    } else {
        set.weights /= total;
    }

    out.n_eff = effective_particles(set.weights);
    if (out.n_eff < resample_fraction * static_cast<double>(n)) {
        const auto indices = systematic_resample_indices(set.weights, rng);
        MatrixXd resampled(d, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            resampled.col(i) =
                set.particles.col(indices[static_cast<std::size_t>(i)]);
        }
        set.particles.swap(resampled);
        set.weights.setConstant(1.0 / static_cast<double>(n));
        out.resampled = true;
    }

    out.mean = set.particles * set.weights;
    MatrixXd cov = MatrixXd::Zero(d, d);
    for (Eigen::Index i = 0; i < n; ++i) {
        const VectorXd dx = set.particles.col(i) - out.mean;
        cov.noalias() += set.weights(i) * dx * dx.transpose();
    }
    out.cov = cov;
    return out;
}

}  // namespace batmon::pf
