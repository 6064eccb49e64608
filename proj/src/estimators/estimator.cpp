#include "batmon/estimators/estimator.hpp"

#include <chrono>
#include <cmath>

#include "batmon/core/linalg.hpp"
#include "batmon/core/rng.hpp"
#include "batmon/estimators/ekf.hpp"
#include "batmon/estimators/particle.hpp"
#include "batmon/estimators/qkf.hpp"
#include "batmon/estimators/svsf.hpp"

namespace batmon {

std::string_view variant_name(FilterVariant v) {
    switch (v) {
        case FilterVariant::Ekf: return "ekf";
        case FilterVariant::Pf: return "pf";
        case FilterVariant::Qkf: return "qkf";
        case FilterVariant::Svsf: return "svsf";
    }
    return "unknown";
}

std::optional<FilterVariant> variant_from_name(std::string_view name) {
    if (name == "ekf") return FilterVariant::Ekf;
    if (name == "pf") return FilterVariant::Pf;
    if (name == "qkf") return FilterVariant::Qkf;
    if (name == "svsf") return FilterVariant::Svsf;
    return std::nullopt;
}

FilterModel battery_filter_model(const PlantAssumptions& plant) {
    FilterModel model;
    const battery::Resistances resist = plant.resist;
    const double t_s = plant.t_s;
    model.transition = [resist, t_s](const VectorXd& x, double u) -> VectorXd {
        return battery::state_transition(Vec4(x), u, resist, t_s);
    };
    model.transition_jacobian = [resist, t_s](const VectorXd& x,
                                              double u) -> MatrixXd {
        return battery::state_jacobian(Vec4(x), u, resist, t_s);
    };
    model.measurement_map = MatrixXd::Zero(2, 4);
    model.measurement_map(0, 0) = 1.0;
    model.measurement_map(1, 1) = 1.0;
    return model;
}

Estimator::Estimator(const StateVector& initial) {
    last_good_.state = initial;
}

Estimate Estimator::step(const Measurement& z, double input) {
    using clock = std::chrono::steady_clock;

    if (diverged_) {
        Estimate frozen = last_good_;
        frozen.diverged = true;
        frozen.wall_time_ns = 0;
        return frozen;
    }

    const auto start = clock::now();
    Estimate estimate;
    bool failed = false;
    try {
        estimate = do_step(z, input);
    } catch (const std::runtime_error&) {
        // NotPositiveSemidefinite, SingularInnovation, DegenerateParameter:
        // the recursion lost a usable state; freeze instead of aborting.
        failed = true;
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
                             clock::now() - start)
                             .count();

    const Vec4 state = estimate.state.to_vec();
    if (failed || estimate.diverged || !state.allFinite() ||
        state.norm() > 1e9) {
        diverged_ = true;
        Estimate frozen = last_good_;
        frozen.diverged = true;
        frozen.wall_time_ns = elapsed;
        return frozen;
    }

    estimate.wall_time_ns = elapsed;
    last_good_ = estimate;
    return estimate;
}

namespace {

class EkfEstimator final : public Estimator {
public:
    EkfEstimator(const EstimatorConfig& config, const PlantAssumptions& plant)
        : Estimator(config.initial_state),
          model_(battery_filter_model(plant)),
          belief_{config.initial_state.to_vec(), config.initial_cov},
          q_(config.q),
          r_(config.r) {}

    std::string_view name() const override { return "ekf"; }

protected:
    Estimate do_step(const Measurement& z, double input) override {
        const Belief prior = ekf::predict(belief_, model_, input, q_);
        auto updated = ekf::update(prior, model_, r_, z.z);
        belief_ = std::move(updated.posterior);

        Estimate estimate;
        estimate.state = StateVector::from_vec(belief_.mean);
        estimate.cov = Mat4(belief_.cov);
        estimate.innovation = Vec2(updated.innovation);
        return estimate;
    }

private:
    FilterModel model_;
    Belief belief_;
    MatrixXd q_;
    MatrixXd r_;
};

class QkfEstimator final : public Estimator {
public:
    QkfEstimator(const EstimatorConfig& config, const PlantAssumptions& plant)
        : Estimator(config.initial_state),
          model_(battery_filter_model(plant)),
          rule_(gauss_hermite_rule(config.qkf_points_per_dim, 4)),
          belief_{config.initial_state.to_vec(), config.initial_cov},
          q_(config.q),
          r_(config.r) {}

    std::string_view name() const override { return "qkf"; }

protected:
    Estimate do_step(const Measurement& z, double input) override {
        const Belief prior = qkf::time_update(belief_, rule_, model_, input, q_);
        auto updated = qkf::measurement_update(prior, rule_, model_, r_, z.z);
        belief_ = std::move(updated.posterior);

        Estimate estimate;
        estimate.state = StateVector::from_vec(belief_.mean);
        estimate.cov = Mat4(belief_.cov);
        estimate.innovation = Vec2(updated.innovation);
        return estimate;
    }

private:
    FilterModel model_;
    QuadraturePointSet rule_;
    Belief belief_;
    MatrixXd q_;
    MatrixXd r_;
};

class PfEstimator final : public Estimator {
public:
    PfEstimator(const EstimatorConfig& config, const PlantAssumptions& plant)
        : Estimator(config.initial_state),
          model_(battery_filter_model(plant)),
          rng_(config.seed),
          set_(pf::initialize(config.initial_state.to_vec(),
                              config.initial_cov, config.pf_particle_count,
                              rng_)),
          q_root_(cholesky_factor(config.q)),
          r_inv_(MatrixXd(config.r).inverse()),
          resample_fraction_(config.pf_resample_threshold) {}

    std::string_view name() const override { return "pf"; }

protected:
    Estimate do_step(const Measurement& z, double input) override {
        const auto result = pf::step(set_, model_, input, q_root_, r_inv_,
                                     z.z, resample_fraction_, rng_);
        Estimate estimate;
        estimate.state = StateVector::from_vec(result.mean);
        estimate.cov = Mat4(result.cov);
        estimate.innovation = Vec2(result.innovation);
        estimate.weight_collapse = result.weight_collapse;
        return estimate;
    }

private:
    FilterModel model_;
    Rng rng_;
    pf::ParticleSet set_;
    MatrixXd q_root_;
    MatrixXd r_inv_;
    double resample_fraction_;
};

// Sliding-mode estimator over an extended measurement vector: the two
// voltages come from the sensor; the two reciprocal capacitances come from
// delayed signal extraction, inverting one sample of the voltage recursion
// using the previous measurement and the known current. The extended map is
// the identity, so the switching gain applies channel by channel.
class SvsfEstimator final : public Estimator {
public:
    SvsfEstimator(const EstimatorConfig& config, const PlantAssumptions& plant)
        : Estimator(config.initial_state),
          resist_(plant.resist),
          t_s_(plant.t_s),
          state_(config.initial_state.to_vec()),
          e_prev_post_(Vec4::Zero()),
          gamma_(config.svsf_gamma),
          psi_(config.svsf_psi),
          min_excitation_(config.svsf_pseudo_min_excitation),
          error_bound_(config.svsf_error_bound),
          error_dwell_(config.svsf_error_dwell) {}

    std::string_view name() const override { return "svsf"; }

protected:
    Estimate do_step(const Measurement& z, double input) override {
        const Vec4 prior = battery::state_transition(state_, input, resist_, t_s_);

        Vec4 e_prior = Vec4::Zero();
        e_prior[0] = z.z[0] - prior[0];
        e_prior[1] = z.z[1] - prior[1];

        // Delayed signal extraction for the parameter channels. Each voltage
        // row of the transition is linear in its reciprocal capacitance, so
        // one measured voltage increment divided by its excitation gives a
        // direct (noisy) parameter observation. Skipped when the excitation
        // is too small to divide by.
        bool active_b = false;
        bool active_c = false;
        double pseudo_w_cb = 0.0;
        double pseudo_w_cc = 0.0;
        if (have_prev_) {
            const double rsum = resist_.r_e + resist_.r_c;
            const double bracket_b =
                prev_z_[1] - prev_z_[0] + resist_.r_c * input;
            const double bracket_c =
                prev_z_[0] - prev_z_[1] + resist_.r_e * input;
            if (std::abs(bracket_b) >= min_excitation_) {
                pseudo_w_cb =
                    (z.z[0] - prev_z_[0]) * rsum / (t_s_ * bracket_b);
                e_prior[2] = pseudo_w_cb - prior[2];
                active_b = true;
            }
            if (std::abs(bracket_c) >= min_excitation_) {
                pseudo_w_cc =
                    (z.z[1] - prev_z_[1]) * rsum / (t_s_ * bracket_c);
                e_prior[3] = pseudo_w_cc - prior[3];
                active_c = true;
            }
        }

        const Vec4 correction =
            svsf::gain(e_prior, e_prev_post_, gamma_, psi_);
        state_ = prior + correction;

        e_prev_post_[0] = z.z[0] - state_[0];
        e_prev_post_[1] = z.z[1] - state_[1];
        e_prev_post_[2] = active_b ? pseudo_w_cb - state_[2] : 0.0;
        e_prev_post_[3] = active_c ? pseudo_w_cc - state_[3] : 0.0;

        prev_z_ = z.z;
        have_prev_ = true;

        Estimate estimate;
        estimate.state = StateVector::from_vec(state_);
        estimate.innovation = Vec2{e_prior[0], e_prior[1]};

        const double output_error =
            std::max(std::abs(e_prior[0]), std::abs(e_prior[1]));
        dwell_ = output_error > error_bound_ ? dwell_ + 1 : 0;
        estimate.diverged = dwell_ >= error_dwell_;
        return estimate;
    }

private:
    battery::Resistances resist_;
    double t_s_;
    Vec4 state_;
    Vec4 e_prev_post_;
    Vec4 gamma_;
    Vec4 psi_;
    double min_excitation_;
    double error_bound_;
    int error_dwell_;
    Vec2 prev_z_ = Vec2::Zero();
    bool have_prev_ = false;
    int dwell_ = 0;
};

}  // namespace

std::unique_ptr<Estimator> make_estimator(const EstimatorConfig& config,
                                          const PlantAssumptions& plant) {
    switch (config.variant) {
        case FilterVariant::Ekf:
            return std::make_unique<EkfEstimator>(config, plant);
        case FilterVariant::Pf:
            return std::make_unique<PfEstimator>(config, plant);
        case FilterVariant::Qkf:
            return std::make_unique<QkfEstimator>(config, plant);
        case FilterVariant::Svsf:
            return std::make_unique<SvsfEstimator>(config, plant);
    }
    throw std::invalid_argument("make_estimator: unknown variant");
}

}  // namespace batmon
