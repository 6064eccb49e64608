#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>

#include "batmon/battery/model.hpp"
#include "batmon/core/types.hpp"
#include "batmon/estimators/model.hpp"

namespace batmon {

enum class FilterVariant { Ekf, Pf, Qkf, Svsf };

std::string_view variant_name(FilterVariant v);
std::optional<FilterVariant> variant_from_name(std::string_view name);

/// What the filters assume about the plant: the resistive constants, the
/// sampling time, and the initial state guess. Built per case by the
/// scenario module; under model error it deliberately disagrees with the
/// truth simulator.
struct PlantAssumptions {
    battery::Resistances resist;
    double t_s = 0.0;
    StateVector initial_state;
};

/// Generic 4-state filter model (transition, Jacobian, measurement map
/// over the two voltages) for a set of plant assumptions.
FilterModel battery_filter_model(const PlantAssumptions& plant);

/// Per-filter tuning. Fields are read by the variants they concern.
struct EstimatorConfig {
    FilterVariant variant = FilterVariant::Ekf;
    StateVector initial_state;
    CovarianceMatrix initial_cov = CovarianceMatrix::Identity();
    Mat4 q = Mat4::Identity();
    Mat2 r = Mat2::Identity();

    int pf_particle_count = 500;
    double pf_resample_threshold = 0.5;  // fraction of the particle count
    int qkf_points_per_dim = 3;

    Vec4 svsf_gamma = Vec4::Constant(0.4);
    Vec4 svsf_psi{1e-3, 1e-3, 1e-2, 1e-2};
    // Minimum per-step voltage excitation (volts) before the delayed-signal
    // parameter channels are trusted.
    double svsf_pseudo_min_excitation = 0.25;
    double svsf_error_bound = 1e6;  // output error magnitude [V]
    int svsf_error_dwell = 200;     // consecutive steps before flagging

    std::uint64_t seed = 0;
};

/// One filter output per sample.
struct Estimate {
    StateVector state;
    std::optional<CovarianceMatrix> cov;  // absent for the SVSF
    Vec2 innovation = Vec2::Zero();
    std::int64_t wall_time_ns = 0;
    bool diverged = false;
    bool weight_collapse = false;  // particle filter bookkeeping
};

/// Uniform stepping contract. A diverged filter freezes its last finite
/// estimate and keeps reporting it; divergence is data, not an error.
class Estimator {
public:
    virtual ~Estimator() = default;
    virtual std::string_view name() const = 0;

    /// Advance one sample: `input` is the supplied current over the
    /// interval that ends at the measurement's timestamp.
    Estimate step(const Measurement& z, double input);

    bool diverged() const { return diverged_; }

protected:
    explicit Estimator(const StateVector& initial);

    virtual Estimate do_step(const Measurement& z, double input) = 0;

private:
    bool diverged_ = false;
    Estimate last_good_;
};

std::unique_ptr<Estimator> make_estimator(const EstimatorConfig& config,
                                          const PlantAssumptions& plant);

}  // namespace batmon
