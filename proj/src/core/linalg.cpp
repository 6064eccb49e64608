#include "batmon/core/linalg.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace batmon {

double max_abs(const MatrixXd& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

MatrixXd symmetrized(const MatrixXd& m) {
    return 0.5 * (m + m.transpose());
}

MatrixXd cholesky_factor(const MatrixXd& m) {
    const auto n = m.rows();
    if (n != m.cols()) {
        throw std::invalid_argument("cholesky_factor: matrix not square");
    }
    const double scale = max_abs(m);
    if (max_abs(m - m.transpose()) > 1e-10 * std::max(scale, 1.0)) {
        throw std::invalid_argument("cholesky_factor: matrix not symmetric");
    }

    MatrixXd lower = MatrixXd::Zero(n, n);
    const double fail_below = -1e-8 * scale;
    for (Eigen::Index j = 0; j < n; ++j) {
        double pivot = m(j, j);
        for (Eigen::Index k = 0; k < j; ++k) {
            pivot -= lower(j, k) * lower(j, k);
        }
        if (pivot < fail_below) {
            throw NotPositiveSemidefinite(
                "cholesky_factor: pivot " + std::to_string(pivot) +
                " at index " + std::to_string(j));
        }
        if (pivot < 0.0) {
            pivot = 0.0;  // clamp roundoff
        }
        lower(j, j) = std::sqrt(pivot);
        if (lower(j, j) == 0.0) {
            continue;  // semidefinite direction: column stays zero
        }
        for (Eigen::Index i = j + 1; i < n; ++i) {
            double s = m(i, j);
            for (Eigen::Index k = 0; k < j; ++k) {
                s -= lower(i, k) * lower(j, k);
            }
            lower(i, j) = s / lower(j, j);
        }
    }
    return lower;
}

MatrixXd pseudo_inverse(const MatrixXd& m) {
    Eigen::JacobiSVD<MatrixXd> svd(m,
                                   Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double cutoff = 1e-13 * std::max<double>(m.rows(), m.cols()) *
                          (sv.size() > 0 ? sv(0) : 0.0);
    VectorXd inv = VectorXd::Zero(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) {
            inv(i) = 1.0 / sv(i);
        }
    }
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

}  // namespace batmon
