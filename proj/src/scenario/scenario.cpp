#include "batmon/scenario/scenario.hpp"

#include <cmath>

#include "batmon/core/rng.hpp"

namespace batmon {

std::size_t Scenario::step_count() const {
    return static_cast<std::size_t>(std::ceil(duration / true_params.t_s));
}

bool Scenario::valid() const {
    return duration > 0.0 && true_params.t_s > 0.0 &&
           step_count() <= 10'000'000 && fault_c_b.valid() &&
           fault_c_c.valid();
}

TruthRecord simulate_truth(const Scenario& s) {
    if (!s.valid()) {
        throw std::invalid_argument("simulate_truth: invalid scenario");
    }
    const std::size_t n = s.step_count();
    const double t_s = s.true_params.t_s;

    TruthRecord rec;
    for (auto* column : {&rec.t, &rec.i_s, &rec.v_cb, &rec.v_cc, &rec.c_b,
                         &rec.c_c, &rec.v_o, &rec.z1, &rec.z2}) {
        column->reserve(n);
    }

    Rng rng(s.noise.seed);
    const Vec2 zero2 = Vec2::Zero();
    const Vec4 zero4 = Vec4::Zero();

    double v_cb = s.initial_v_cb;
    double v_cc = s.initial_v_cc;
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) * t_s;
        battery::BatteryParams p = s.true_params;
        p.c_b = evaluate_fault(s.fault_c_b, t);
        p.c_c = evaluate_fault(s.fault_c_c, t);
        const double i_s = s.current.at(t);

        rec.t.push_back(t);
        rec.i_s.push_back(i_s);
        rec.v_cb.push_back(v_cb);
        rec.v_cc.push_back(v_cc);
        rec.c_b.push_back(p.c_b);
        rec.c_c.push_back(p.c_c);
        rec.v_o.push_back(battery::output_voltage(p, v_cb, v_cc, i_s));

        const Vec2 v_noise =
            gaussian_sample(rng, zero2, s.noise.measurement_cov);
        rec.z1.push_back(v_cb + v_noise[0]);
        rec.z2.push_back(v_cc + v_noise[1]);

        // Advance: the parameters are scheduled, so process noise enters
        // the voltage states only.
        const auto [v_cb_next, v_cc_next] =
            battery::discrete_step(p, v_cb, v_cc, i_s);
        const Vec4 w_noise = gaussian_sample(rng, zero4, s.noise.process_cov);
        v_cb = v_cb_next + w_noise[0];
        v_cc = v_cc_next + w_noise[1];
    }
    return rec;
}

PlantAssumptions filter_plant_for(const Scenario& s) {
    PlantAssumptions plant;
    plant.t_s = s.true_params.t_s;
    plant.resist = battery::resistances(s.true_params);

    double c_b0 = evaluate_fault(s.fault_c_b, 0.0);
    double c_c0 = evaluate_fault(s.fault_c_c, 0.0);
    if (s.mismatch.enabled) {
        plant.resist.r_e *= s.mismatch.r_e_bias;
        plant.resist.r_c *= s.mismatch.r_c_bias;
        plant.resist.r_t *= s.mismatch.r_t_bias;
        c_b0 *= s.mismatch.c_b_bias;
        c_c0 *= s.mismatch.c_c_bias;
    }
    plant.initial_state = StateVector::from_capacitances(
        s.initial_v_cb, s.initial_v_cc, c_b0, c_c0);
    return plant;
}

}  // namespace batmon
