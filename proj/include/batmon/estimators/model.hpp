#pragma once

#include <functional>

#include "batmon/core/types.hpp"

namespace batmon {

/// System model seen by the Bayesian filters: a nonlinear transition with
/// its Jacobian and a linear measurement map z = C x. Dimensions are
/// runtime values so tests can run the same filters on scalar and
/// linear benchmark systems.
struct FilterModel {
    std::function<VectorXd(const VectorXd&, double)> transition;
    std::function<MatrixXd(const VectorXd&, double)> transition_jacobian;
    MatrixXd measurement_map;  // m x n

    Eigen::Index state_dim() const { return measurement_map.cols(); }
    Eigen::Index measurement_dim() const { return measurement_map.rows(); }
};

/// Gaussian belief passed between predict and update stages.
struct Belief {
    VectorXd mean;
    MatrixXd cov;
};

}  // namespace batmon
