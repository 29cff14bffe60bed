#pragma once

#include <Eigen/Core>

namespace lorentz {

/// Gauss-Legendre nodes and weights mapped onto an interval.
struct QuadratureRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};

/// n-point Gauss-Legendre rule on [lo, hi] (Newton iteration on P_n).
QuadratureRule gauss_legendre(int n, double lo = -1.0, double hi = 1.0);

/// Apply a rule to a callable f(double) -> double.
template <typename F>
double integrate(const QuadratureRule& rule, F&& f) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(rule.nodes[i]);
    }
    return sum;
}

/// Polar-angle rule on [0, pi] carrying the d-sphere measure
/// S_{d-1} sin^{d-2}(theta) in its weights, so that
/// integrate(rule, f) = surface integral of f(cos theta) over S^{d-1}
/// for zonal f. Requires d >= 2.
QuadratureRule zonal_sphere_rule(int d, int n);

} // namespace lorentz
