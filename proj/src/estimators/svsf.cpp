#include "batmon/estimators/svsf.hpp"

#include <algorithm>
#include <cmath>

namespace batmon::svsf {

VectorXd saturate(const VectorXd& error, const VectorXd& psi) {
    VectorXd out(error.size());
    for (Eigen::Index i = 0; i < error.size(); ++i) {
        out(i) = std::clamp(error(i) / psi(i), -1.0, 1.0);
    }
    return out;
}

VectorXd gain(const VectorXd& e_prior, const VectorXd& e_prev_post,
              const VectorXd& gamma, const VectorXd& psi) {
    const VectorXd magnitude =
        e_prior.cwiseAbs() + gamma.cwiseProduct(e_prev_post.cwiseAbs());
    return magnitude.cwiseProduct(saturate(e_prior, psi));
}

}  // namespace batmon::svsf
