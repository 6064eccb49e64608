#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace batmon {

using Vec2 = Eigen::Vector2d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;
using Eigen::MatrixXd;
using Eigen::VectorXd;

/// 4x4 error covariance over the estimation state ordering
/// [v_cb, v_cc, w_cb, w_cc].
using CovarianceMatrix = Mat4;

// Raised when a matrix handed to a factorization is not positive
// semidefinite beyond the clamping tolerance. In a filter recursion this
// signals a diverged covariance.
struct NotPositiveSemidefinite : std::runtime_error {
    explicit NotPositiveSemidefinite(const std::string& what)
        : std::runtime_error(what) {}
};

// Innovation covariance too ill-conditioned to invert.
struct SingularInnovation : std::runtime_error {
    explicit SingularInnovation(const std::string& what)
        : std::runtime_error(what) {}
};

// Physical state with a non-positive reciprocal capacitance.
struct DegenerateParameter : std::runtime_error {
    explicit DegenerateParameter(const std::string& what)
        : std::runtime_error(what) {}
};

struct UnsupportedOrder : std::invalid_argument {
    explicit UnsupportedOrder(const std::string& what)
        : std::invalid_argument(what) {}
};

struct LengthMismatch : std::invalid_argument {
    explicit LengthMismatch(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Estimation state of the two-capacitor battery. Internally the
/// capacitance parameters are carried as reciprocals (w = 1/C), which keeps
/// the transition map polynomial in the state; callers see farads.
struct StateVector {
    double v_cb = 0.0;  // bulk capacitor voltage [V]
    double v_cc = 0.0;  // surface capacitor voltage [V]
    double w_cb = 0.0;  // 1/C_b [1/F]
    double w_cc = 0.0;  // 1/C_c [1/F]

    static StateVector from_vec(const Vec4& x) {
        return {x[0], x[1], x[2], x[3]};
    }

    // Voltage/capacitance form used by configs and reports.
    static StateVector from_capacitances(double v_cb, double v_cc,
                                         double c_b, double c_c) {
        if (c_b <= 0.0 || c_c <= 0.0) {
            throw DegenerateParameter("capacitance must be positive");
        }
        return {v_cb, v_cc, 1.0 / c_b, 1.0 / c_c};
    }

    Vec4 to_vec() const { return Vec4{v_cb, v_cc, w_cb, w_cc}; }

    double c_b() const { return 1.0 / w_cb; }
    double c_c() const { return 1.0 / w_cc; }

    bool physical() const { return w_cb > 0.0 && w_cc > 0.0; }
};

/// One sample of the two measured capacitor voltages.
struct Measurement {
    Vec2 z = Vec2::Zero();  // observed [v_cb, v_cc] [V]
    double t = 0.0;         // [s]
};

/// Noise model for truth generation: process covariance over the full
/// 4-state ordering, measurement covariance over the two observed voltages.
struct NoiseSpec {
    Mat4 process_cov = Mat4::Zero();
    Mat2 measurement_cov = Mat2::Zero();
    std::uint64_t seed = 0;
};

}  // namespace batmon
