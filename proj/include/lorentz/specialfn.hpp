#pragma once

// Real-argument special functions: Bessel J, Y, I, Gamma, hypergeometric
// series, Bessel zeros and the unit ball/sphere measures.
//
// Orders used by the physics code are integers and half-integers >= -1/2.
// Arbitrary real orders are accepted; negative non-integer orders go
// through the reflection formulas.

#include <numbers>
#include <span>

namespace lorentz::special {

inline constexpr double euler_gamma = 0.57721566490153286061;

/// J_nu(z) and Y_nu(z) evaluated together.
struct BesselJY {
    double j;
    double y;
};

/// Both Bessel functions of the first and second kind at once.
///
/// Strategy: closed trigonometric forms for nu = +-1/2, Hankel asymptotic
/// expansion for z >= max(25, 2 nu^2), Temme series (z < 2) or Steed's
/// continued fraction (z >= 2) otherwise. Throws DomainError if z <= 0.
BesselJY bessel_jy(double nu, double z);

/// J_nu(z) for z >= 0. J_nu(0) is 1 for nu == 0 and 0 for nu > 0.
double bessel_j(double nu, double z);

/// Y_nu(z); throws DomainError for z <= 0.
double bessel_y(double nu, double z);

/// Modified Bessel function I_nu(z), z >= 0, nu > -1. Positive-term power
/// series, so it is accurate wherever the result is representable.
double bessel_i(double nu, double z);

/// First positive zero j_nu of J_nu for nu >= 0.
double bessel_first_zero(double nu);

/// Gamma function; PoleError at non-positive integers.
double gamma_fn(double x);

/// 0F1(; a; z). Direct series for z >= -4, Bessel representation
/// Gamma(a) (x/2)^{1-a} J_{a-1}(x), x = 2 sqrt(-z), below that.
double hyp0f1(double a, double z);

/// Generalized hypergeometric series pFq(a; b; z) summed term by term.
/// Only meant for moderate |z|; no attempt is made to control cancellation.
double hyp_pfq(std::span<const double> a, std::span<const double> b, double z);

/// Volume of the unit d-ball, pi^{d/2} / Gamma(d/2 + 1).
double ball_volume(int d);

/// Surface area of the unit d-sphere, d * V_d.
double sphere_surface(int d);

} // namespace lorentz::special
