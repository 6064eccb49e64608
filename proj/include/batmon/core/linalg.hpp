#pragma once

#include "batmon/core/types.hpp"

namespace batmon {

/// Lower-triangular S with S*S^T = m for a symmetric positive semidefinite
/// matrix. Tiny negative pivots (roundoff) are clamped to zero; pivots below
/// -1e-8 * max|m| raise NotPositiveSemidefinite.
MatrixXd cholesky_factor(const MatrixXd& m);

/// Moore-Penrose pseudo-inverse; rank-deficient inputs yield the
/// minimum-norm solution.
MatrixXd pseudo_inverse(const MatrixXd& m);

/// (m + m^T) / 2, the drift control applied after every covariance update.
MatrixXd symmetrized(const MatrixXd& m);

double max_abs(const MatrixXd& m);

}  // namespace batmon
