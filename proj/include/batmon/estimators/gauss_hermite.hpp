#pragma once

#include "batmon/core/types.hpp"

namespace batmon {

/// Deterministic cubature rule for integrals against a standard normal:
/// columns of points are the abscissas, weights sum to one. A tensor rule
/// over d dimensions has points_per_dim^d columns.
struct QuadraturePointSet {
    MatrixXd points;   // d x count
    VectorXd weights;  // count

    Eigen::Index count() const { return weights.size(); }
};

/// Tensor-product Gauss-Hermite rule for N(0, I_d). Supported orders are
/// 3 and 5 points per dimension (exact for total polynomial degree 5 and
/// 9 respectively); anything else throws UnsupportedOrder.
QuadraturePointSet gauss_hermite_rule(int points_per_dim, int dim);

}  // namespace batmon
