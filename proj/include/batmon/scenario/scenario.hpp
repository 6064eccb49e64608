#pragma once

#include <cstdint>
#include <vector>

#include "batmon/battery/model.hpp"
#include "batmon/battery/profiles.hpp"
#include "batmon/core/types.hpp"
#include "batmon/estimators/estimator.hpp"

namespace batmon {

/// Deliberate disagreement between the truth simulator and the filters'
/// plant assumptions: multiplicative biases on the resistances and on the
/// initial capacitance guesses. Models the "known model, wrong constants"
/// regime; the fault schedule is never disclosed to the filters.
struct MismatchSpec {
    bool enabled = false;
    double r_e_bias = 1.2;
    double r_c_bias = 1.2;
    double r_t_bias = 1.2;
    double c_b_bias = 2.0;
    double c_c_bias = 2.0;
};

/// Everything that defines one simulated experiment.
struct Scenario {
    double duration = 60.0;  // [s]
    battery::BatteryParams true_params;  // nominal plant; t_s lives here
    battery::CurrentProfile current;
    battery::FaultProfile fault_c_b;
    battery::FaultProfile fault_c_c;
    NoiseSpec noise;
    MismatchSpec mismatch;
    double initial_v_cb = 0.0;  // [V]
    double initial_v_cc = 0.0;  // [V]
    std::uint64_t seed = 1;

    std::size_t step_count() const;
    bool valid() const;
};

/// Simulated plant history plus the noisy measurement stream every filter
/// consumes.
struct TruthRecord {
    std::vector<double> t;
    std::vector<double> i_s;
    std::vector<double> v_cb;
    std::vector<double> v_cc;
    std::vector<double> c_b;
    std::vector<double> c_c;
    std::vector<double> v_o;
    std::vector<double> z1;
    std::vector<double> z2;

    std::size_t steps() const { return t.size(); }
};

/// Step the discrete plant over the scenario: capacitances follow the
/// fault schedules, process noise perturbs the voltage states only, and
/// measurements observe the two voltages through the measurement noise.
TruthRecord simulate_truth(const Scenario& s);

/// The plant model handed to the filters: true constants in the noise-only
/// case; biased resistances and initial capacitances when mismatch is
/// enabled. Initial parameters come from the fault schedules at t = 0.
PlantAssumptions filter_plant_for(const Scenario& s);

}  // namespace batmon
