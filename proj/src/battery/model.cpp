#include "batmon/battery/model.hpp"

namespace batmon::battery {

std::pair<double, double> continuous_derivatives(const BatteryParams& p,
                                                 double v_cb, double v_cc,
                                                 double i_s) {
    const double rsum = p.r_e + p.r_c;
    const double dv_cb = (i_s * p.r_c + v_cc - v_cb) / (p.c_b * rsum);
    const double dv_cc = (i_s * p.r_e + v_cb - v_cc) / (p.c_c * rsum);
    return {dv_cb, dv_cc};
}

std::pair<double, double> discrete_step(const BatteryParams& p, double v_cb,
                                        double v_cc, double i_s) {
    const auto [dv_cb, dv_cc] = continuous_derivatives(p, v_cb, v_cc, i_s);
    return {v_cb + p.t_s * dv_cb, v_cc + p.t_s * dv_cc};
}

double output_voltage(const BatteryParams& p, double v_cb, double v_cc,
                      double i_s) {
    const double rsum = p.r_e + p.r_c;
    return (p.r_c * v_cb + p.r_e * v_cc) / rsum +
           (p.r_t + p.r_e * p.r_c / rsum) * i_s;
}

Vec4 state_transition(const Vec4& x, double i_s, const Resistances& r,
                      double t_s) {
    const double rsum = r.r_e + r.r_c;
    const double v_cb = x[0];
    const double v_cc = x[1];
    const double w_cb = x[2];
    const double w_cc = x[3];
    Vec4 next;
    next[0] = v_cb + t_s * w_cb / rsum * (v_cc - v_cb + r.r_c * i_s);
    next[1] = v_cc + t_s * w_cc / rsum * (v_cb - v_cc + r.r_e * i_s);
    next[2] = w_cb;
    next[3] = w_cc;
    return next;
}

Mat4 state_jacobian(const Vec4& x, double i_s, const Resistances& r,
                    double t_s) {
    const double rsum = r.r_e + r.r_c;
    const double v_cb = x[0];
    const double v_cc = x[1];
    const double a = t_s / rsum;
    Mat4 phi = Mat4::Identity();
    phi(0, 0) = 1.0 - a * x[2];
    phi(0, 1) = a * x[2];
    phi(0, 2) = a * (v_cc - v_cb + r.r_c * i_s);
    phi(1, 0) = a * x[3];
    phi(1, 1) = 1.0 - a * x[3];
    phi(1, 3) = a * (v_cb - v_cc + r.r_e * i_s);
    return phi;
}

StateVector process_model(const StateVector& x, double i_s,
                          const Resistances& r, double t_s) {
    if (!x.physical()) {
        throw DegenerateParameter("process_model: reciprocal capacitance <= 0");
    }
    return StateVector::from_vec(state_transition(x.to_vec(), i_s, r, t_s));
}

Mat4 jacobian(const StateVector& x, double i_s, const Resistances& r,
              double t_s) {
    if (!x.physical()) {
        throw DegenerateParameter("jacobian: reciprocal capacitance <= 0");
    }
    return state_jacobian(x.to_vec(), i_s, r, t_s);
}

}  // namespace batmon::battery
