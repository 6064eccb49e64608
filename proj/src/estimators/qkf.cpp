#include "batmon/estimators/qkf.hpp"

#include <vector>

#include <Eigen/SVD>

#include "batmon/core/linalg.hpp"

namespace batmon::qkf {
namespace {

std::vector<VectorXd> place_points(const Belief& belief,
                                   const QuadraturePointSet& rule) {
    const MatrixXd root = cholesky_factor(belief.cov);
    std::vector<VectorXd> points(static_cast<std::size_t>(rule.count()));
    for (Eigen::Index l = 0; l < rule.count(); ++l) {
        points[static_cast<std::size_t>(l)] =
            belief.mean + root * rule.points.col(l);
    }
    return points;
}

}  // namespace

Belief time_update(const Belief& posterior, const QuadraturePointSet& rule,
                   const FilterModel& model, double input, const MatrixXd& q) {
    std::vector<VectorXd> points = place_points(posterior, rule);
    for (auto& p : points) {
        p = model.transition(p, input);
    }

    const Eigen::Index n = posterior.mean.size();
    VectorXd mean = VectorXd::Zero(n);
    for (Eigen::Index l = 0; l < rule.count(); ++l) {
        mean += rule.weights(l) * points[static_cast<std::size_t>(l)];
    }

    // Centered weighted sum; algebraically the same second moment as the
    // raw outer-product form, without the cancellation.
    MatrixXd cov = MatrixXd::Zero(n, n);
    for (Eigen::Index l = 0; l < rule.count(); ++l) {
        const VectorXd d = points[static_cast<std::size_t>(l)] - mean;
        cov += rule.weights(l) * d * d.transpose();
    }
    return {mean, symmetrized(cov + q)};
}

ekf::UpdateResult measurement_update(const Belief& prior,
                                     const QuadraturePointSet& rule,
                                     const FilterModel& model,
                                     const MatrixXd& r, const VectorXd& z) {
    const std::vector<VectorXd> points = place_points(prior, rule);
    const MatrixXd& c = model.measurement_map;
    const Eigen::Index m = c.rows();
    const Eigen::Index n = prior.mean.size();

    std::vector<VectorXd> predicted(points.size());
    VectorXd z_hat = VectorXd::Zero(m);
    for (Eigen::Index l = 0; l < rule.count(); ++l) {
        predicted[static_cast<std::size_t>(l)] =
            c * points[static_cast<std::size_t>(l)];
        z_hat += rule.weights(l) * predicted[static_cast<std::size_t>(l)];
    }

    MatrixXd p_zz = r;
    MatrixXd p_xz = MatrixXd::Zero(n, m);
    for (Eigen::Index l = 0; l < rule.count(); ++l) {
        const VectorXd dz = predicted[static_cast<std::size_t>(l)] - z_hat;
        const VectorXd dx = points[static_cast<std::size_t>(l)] - prior.mean;
        p_zz += rule.weights(l) * dz * dz.transpose();
        p_xz += rule.weights(l) * dx * dz.transpose();
    }

    Eigen::JacobiSVD<MatrixXd> svd(p_zz);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 0.0 || sv(0) / sv(sv.size() - 1) > 1e12) {
        throw SingularInnovation("qkf::measurement_update: innovation covariance");
    }

    const MatrixXd gain = p_xz * p_zz.inverse();
    ekf::UpdateResult out;
    out.innovation = z - z_hat;
    out.posterior.mean = prior.mean + gain * out.innovation;
    out.posterior.cov =
        symmetrized(prior.cov - gain * p_zz * gain.transpose());
    return out;
}

}  // namespace batmon::qkf
