#include "batmon/estimators/gauss_hermite.hpp"

#include <cmath>
#include <vector>

namespace batmon {
namespace {

struct UnivariateRule {
    std::vector<double> points;
    std::vector<double> weights;
};

// Closed forms from the roots of the probabilists' Hermite polynomials:
// He_3 = x^3 - 3x and He_5 = x^5 - 10x^3 + 15x, with weights
// n! / (n^2 He_{n-1}(x)^2).
UnivariateRule univariate_rule(int points_per_dim) {
    if (points_per_dim == 3) {
        const double s3 = std::sqrt(3.0);
        return {{-s3, 0.0, s3}, {1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0}};
    }
    if (points_per_dim == 5) {
        const double s10 = std::sqrt(10.0);
        const double inner = std::sqrt(5.0 - s10);
        const double outer = std::sqrt(5.0 + s10);
        const double he4_inner = 8.0 - 4.0 * s10;
        const double he4_outer = 8.0 + 4.0 * s10;
        const double w_inner = 120.0 / (25.0 * he4_inner * he4_inner);
        const double w_outer = 120.0 / (25.0 * he4_outer * he4_outer);
        return {{-outer, -inner, 0.0, inner, outer},
                {w_outer, w_inner, 8.0 / 15.0, w_inner, w_outer}};
    }
    throw UnsupportedOrder("gauss_hermite_rule: points_per_dim must be 3 or 5");
}

}  // namespace

QuadraturePointSet gauss_hermite_rule(int points_per_dim, int dim) {
    if (dim < 1) {
        throw UnsupportedOrder("gauss_hermite_rule: dim must be >= 1");
    }
    const UnivariateRule uni = univariate_rule(points_per_dim);

    Eigen::Index count = 1;
    for (int k = 0; k < dim; ++k) {
        count *= points_per_dim;
    }

    QuadraturePointSet rule;
    rule.points.resize(dim, count);
    rule.weights.resize(count);

    std::vector<int> index(dim, 0);
    for (Eigen::Index l = 0; l < count; ++l) {
        double w = 1.0;
        for (int k = 0; k < dim; ++k) {
            rule.points(k, l) = uni.points[index[k]];
            w *= uni.weights[index[k]];
        }
        rule.weights(l) = w;
        for (int k = 0; k < dim; ++k) {  // odometer increment
            if (++index[k] < points_per_dim) {
                break;
            }
            index[k] = 0;
        }
    }
    return rule;
}

}  // namespace batmon
