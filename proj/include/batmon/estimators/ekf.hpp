#pragma once

#include "batmon/estimators/model.hpp"

namespace batmon::ekf {

/// Propagate mean through the transition map and covariance through its
/// Jacobian: P' = F P F^T + Q, symmetrized.
Belief predict(const Belief& posterior, const FilterModel& model,
               double input, const MatrixXd& q);

struct UpdateResult {
    Belief posterior;
    VectorXd innovation;
};

/// Standard gain-form measurement update with C from the model. Throws
/// SingularInnovation when the innovation covariance has condition number
/// above 1e12.
UpdateResult update(const Belief& prior, const FilterModel& model,
                    const MatrixXd& r, const VectorXd& z);

}  // namespace batmon::ekf
