#pragma once

#include <utility>

#include "batmon/core/types.hpp"

namespace batmon::battery {

/// Equivalent-circuit constants of the RC battery: bulk branch (R_e, C_b),
/// surface branch (R_c, C_c), terminal resistance R_t, plus the sampling
/// time of the discrete model.
struct BatteryParams {
    double r_e = 0.0;  // [ohm]
    double r_c = 0.0;  // [ohm]
    double r_t = 0.0;  // [ohm]
    double c_b = 0.0;  // [F]
    double c_c = 0.0;  // [F]
    double t_s = 0.0;  // [s]

    bool valid() const {
        return r_e > 0.0 && r_c > 0.0 && r_t > 0.0 && c_b > 0.0 &&
               c_c > 0.0 && t_s > 0.0;
    }
};

/// The resistive part of the circuit, which is all the estimation model
/// needs once capacitances become states.
struct Resistances {
    double r_e = 0.0;
    double r_c = 0.0;
    double r_t = 0.0;
};

inline Resistances resistances(const BatteryParams& p) {
    return {p.r_e, p.r_c, p.r_t};
}

/// Continuous-time rates (dv_cb/dt, dv_cc/dt) of the two capacitor
/// voltages for a supplied current i_s.
std::pair<double, double> continuous_derivatives(const BatteryParams& p,
                                                 double v_cb, double v_cc,
                                                 double i_s);

/// One forward-Euler step of the capacitor voltages over t_s.
std::pair<double, double> discrete_step(const BatteryParams& p, double v_cb,
                                        double v_cc, double i_s);

/// Terminal voltage: a resistive divider over the capacitor voltages plus
/// the series drop of the supplied current.
double output_voltage(const BatteryParams& p, double v_cb, double v_cc,
                      double i_s);

/// Transition map of the 4-state estimation model in raw coordinates
/// [v_cb, v_cc, w_cb, w_cc]: voltages follow the Euler step with C = 1/w,
/// reciprocal capacitances carry over unchanged. Defined for any real w;
/// filters evaluate it at non-physical points.
Vec4 state_transition(const Vec4& x, double i_s, const Resistances& r,
                      double t_s);

/// Jacobian of state_transition with respect to the state.
Mat4 state_jacobian(const Vec4& x, double i_s, const Resistances& r,
                    double t_s);

/// state_transition on the physical state; throws DegenerateParameter when
/// a reciprocal capacitance is not strictly positive.
StateVector process_model(const StateVector& x, double i_s,
                          const Resistances& r, double t_s);

/// Jacobian at a physical state; same precondition as process_model.
Mat4 jacobian(const StateVector& x, double i_s, const Resistances& r,
              double t_s);

}  // namespace batmon::battery
