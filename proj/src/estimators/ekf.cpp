#include "batmon/estimators/ekf.hpp"

#include <Eigen/SVD>

#include "batmon/core/linalg.hpp"

namespace batmon::ekf {

Belief predict(const Belief& posterior, const FilterModel& model,
               double input, const MatrixXd& q) {
    const MatrixXd f = model.transition_jacobian(posterior.mean, input);
    Belief prior;
    prior.mean = model.transition(posterior.mean, input);
    prior.cov = symmetrized(f * posterior.cov * f.transpose() + q);
    return prior;
}

UpdateResult update(const Belief& prior, const FilterModel& model,
                    const MatrixXd& r, const VectorXd& z) {
    const MatrixXd& c = model.measurement_map;
    const MatrixXd pct = prior.cov * c.transpose();
    const MatrixXd s = c * pct + r;

    Eigen::JacobiSVD<MatrixXd> svd(s);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 0.0 || sv(0) / sv(sv.size() - 1) > 1e12) {
        throw SingularInnovation("ekf::update: innovation covariance");
    }

    const MatrixXd gain = pct * s.inverse();
    UpdateResult out;
    out.innovation = z - c * prior.mean;
    out.posterior.mean = prior.mean + gain * out.innovation;
    const MatrixXd eye = MatrixXd::Identity(prior.cov.rows(), prior.cov.cols());
    out.posterior.cov = symmetrized((eye - gain * c) * prior.cov);
    return out;
}

}  // namespace batmon::ekf
