#pragma once

#include "batmon/core/types.hpp"

namespace batmon::svsf {

/// Saturated error: clamp(e_i / psi_i, -1, 1) per channel. Inside the
/// smoothing boundary layer the correction is proportional; outside it
/// switches at full magnitude.
VectorXd saturate(const VectorXd& error, const VectorXd& psi);

/// Switching gain: (|e_prior| + gamma o |e_prev_post|) o sat(e_prior, psi),
/// all elementwise. e_prev_post is the a posteriori output error stored
/// from the previous step.
VectorXd gain(const VectorXd& e_prior, const VectorXd& e_prev_post,
              const VectorXd& gamma, const VectorXd& psi);

}  // namespace batmon::svsf
