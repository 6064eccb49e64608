#pragma once

#include "batmon/estimators/ekf.hpp"
#include "batmon/estimators/gauss_hermite.hpp"
#include "batmon/estimators/model.hpp"

namespace batmon::qkf {

/// Quadrature time update: factorize the posterior covariance, place the
/// rule's points around the mean, propagate each through the transition,
/// and rebuild mean and covariance (plus Q) from the weighted set.
Belief time_update(const Belief& posterior, const QuadraturePointSet& rule,
                   const FilterModel& model, double input, const MatrixXd& q);

/// Quadrature measurement update: fresh points around the prior, predicted
/// measurement and innovation/cross covariances from the weighted set,
/// then the usual gain-form correction.
ekf::UpdateResult measurement_update(const Belief& prior,
                                     const QuadraturePointSet& rule,
                                     const FilterModel& model,
                                     const MatrixXd& r, const VectorXd& z);

}  // namespace batmon::qkf
