#pragma once

#include "batmon/core/rng.hpp"
#include "batmon/estimators/model.hpp"

namespace batmon::pf {

/// Weighted sample cloud: one particle per column, weights normalized to
/// sum to one.
struct ParticleSet {
    MatrixXd particles;  // d x n
    VectorXd weights;    // n

    Eigen::Index count() const { return weights.size(); }
};

/// Draw n particles around an initial belief.
ParticleSet initialize(const VectorXd& mean, const MatrixXd& cov,
                       Eigen::Index count, Rng& rng);

double effective_particles(const VectorXd& weights);

/// Systematic (low-variance) resampling: returns the chosen particle
/// indices; with uniform weights every particle is chosen exactly once.
std::vector<Eigen::Index> systematic_resample_indices(const VectorXd& weights,
                                                      Rng& rng);

struct StepResult {
    VectorXd mean;
    MatrixXd cov;
    VectorXd innovation;  // measurement minus predicted-measurement mean
    double n_eff = 0.0;
    bool resampled = false;
    bool weight_collapse = false;
};

/// One bootstrap SIR step: propagate every particle through the transition
/// plus process noise, reweight by the Gaussian measurement likelihood,
/// renormalize, and resample when the effective particle count drops below
/// resample_fraction * n. If every likelihood underflows to zero the
/// weights are reset to uniform and the step is flagged.
StepResult step(ParticleSet& set, const FilterModel& model, double input,
                const MatrixXd& process_noise_root, const MatrixXd& r_inv,
                const VectorXd& z, double resample_fraction, Rng& rng);

}  // namespace batmon::pf
