#include "lorentz/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "lorentz/errors.hpp"
#include "lorentz/specialfn.hpp"

namespace lorentz {

QuadratureRule gauss_legendre(int n, double lo, double hi) {
    if (n < 1) {
        throw ValidationError("gauss_legendre: need at least one node");
    }
    QuadratureRule rule{Eigen::VectorXd(n), Eigen::VectorXd(n)};
    const double mid = 0.5 * (hi + lo);
    const double half = 0.5 * (hi - lo);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            dp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                break;
            }
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0;
        double p1 = 0.0;
        for (int j = 0; j < n; ++j) {
            const double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
        }
        dp = n * (x * p0 - p1) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = mid - half * x;
        rule.nodes[n - 1 - i] = mid + half * x;
        rule.weights[i] = half * w;
        rule.weights[n - 1 - i] = half * w;
    }
    return rule;
}

QuadratureRule zonal_sphere_rule(int d, int n) {
    if (d < 2) {
        throw ValidationError("zonal_sphere_rule: requires d >= 2");
    }
    QuadratureRule rule = gauss_legendre(n, 0.0, std::numbers::pi);
    const double outer = special::sphere_surface(d - 1);
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
        rule.weights[i] *= outer * std::pow(std::sin(rule.nodes[i]), d - 2);
    }
    return rule;
}

} // namespace lorentz
