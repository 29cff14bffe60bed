#pragma once

// Free-space Green functions of the d-dimensional Helmholtz operator,
// (nabla^2 + k^2) G = delta, on the physical sheet (real k > 0).
//
//   G+(k, r) = -(i/4) (k / 2 pi r)^{(d-2)/2} H+_{(d-2)/2}(kr) = P(k, r) - i I(k, r)
//
// Lengths are in units of the mean inter-scatterer distance.

#include <complex>

namespace lorentz {

/// Dimension and wavenumber shared by all Green-function evaluations.
class GreensContext {
public:
    /// Throws DomainError unless d >= 1 and k > 0 (finite).
    GreensContext(int d, double k);

    int dim() const noexcept { return d_; }
    double wavenumber() const noexcept { return k_; }
    /// Bessel order (d - 2) / 2.
    double order() const noexcept { return 0.5 * (d_ - 2); }
    /// I(k, 0) = (pi/2) S_d / (2 pi)^d k^{d-2}.
    double imag_at_origin() const noexcept { return imag_at_origin_; }

private:
    int d_;
    double k_;
    double imag_at_origin_;
};

/// P(k, r) and I(k, r) from a single Bessel evaluation.
struct GreenParts {
    double real;      ///< P(k, r)
    double imag_reg;  ///< I(k, r)
};

/// Real and regular-imaginary parts. r > 0, or r == 0 when d == 1.
GreenParts green_parts(const GreensContext& ctx, double r);

/// Outgoing Green function G+(k, r) = P - i I.
std::complex<double> green_plus(const GreensContext& ctx, double r);

/// I(k, r) = -Im G+(k, r); entire in r^2, so any real r is accepted.
double green_imag_reg(const GreensContext& ctx, double r);

/// P(k, r) = Re G+(k, r).
double green_real(const GreensContext& ctx, double r);

/// I(k, 0) without building a context.
double green_imag_at_origin(int d, double k);

/// Integral of exp(i z 1.Omega) over the unit (d-1)-sphere: S_d 0F1(d/2; -z^2/4).
double plane_wave_sphere_integral(int d, double z);

} // namespace lorentz
