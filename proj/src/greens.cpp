#include "lorentz/greens.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lorentz/errors.hpp"
#include "lorentz/specialfn.hpp"

namespace lorentz {

namespace {

constexpr double pi = std::numbers::pi;

// Below this kr the power/Bessel form of I loses digits; I is evaluated as
// I(k,0) 0F1(d/2; -(kr)^2/4) instead.
constexpr double series_threshold = 1e-3;

} // namespace

GreensContext::GreensContext(int d, double k) : d_(d), k_(k) {
    if (d < 1) {
        throw DomainError("GreensContext: dimension must be >= 1, got " + std::to_string(d));
    }
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw DomainError("GreensContext: wavenumber must be real and positive");
    }
    imag_at_origin_ = green_imag_at_origin(d, k);
}

double green_imag_at_origin(int d, double k) {
    return 0.5 * pi * special::sphere_surface(d) / std::pow(2.0 * pi, d) * std::pow(k, d - 2);
}

GreenParts green_parts(const GreensContext& ctx, double r) {
    const int d = ctx.dim();
    const double k = ctx.wavenumber();
    if (r < 0.0 || !std::isfinite(r)) {
        throw DomainError("green_parts: distance must be finite and non-negative");
    }
    const double kr = k * r;
    if (d == 1) {
        return {std::sin(kr) / (2.0 * k), std::cos(kr) / (2.0 * k)};
    }
    if (r == 0.0) {
        throw DomainError("green_parts: G+ is singular at r = 0 for d >= 2");
    }
    if (d == 3) {
        const double denom = 4.0 * pi * r;
        const double imag = kr < series_threshold
                                ? ctx.imag_at_origin() * special::hyp0f1(1.5, -0.25 * kr * kr)
                                : std::sin(kr) / denom;
        return {-std::cos(kr) / denom, imag};
    }
    const double nu = ctx.order();
    const auto jy = special::bessel_jy(nu, kr);
    const double prefactor = 0.25 * std::pow(k / (2.0 * pi * r), nu);
    const double imag = kr < series_threshold
                            ? ctx.imag_at_origin() * special::hyp0f1(0.5 * d, -0.25 * kr * kr)
                            : prefactor * jy.j;
    return {prefactor * jy.y, imag};
}

std::complex<double> green_plus(const GreensContext& ctx, double r) {
    const GreenParts parts = green_parts(ctx, r);
    return {parts.real, -parts.imag_reg};
}

double green_imag_reg(const GreensContext& ctx, double r) {
    const double a = std::abs(r);
    const double kr = ctx.wavenumber() * a;
    if (ctx.dim() == 1) {
        return std::cos(kr) / (2.0 * ctx.wavenumber());
    }
    if (kr < series_threshold) {
        return ctx.imag_at_origin() * special::hyp0f1(0.5 * ctx.dim(), -0.25 * kr * kr);
    }
    return green_parts(ctx, a).imag_reg;
}

double green_real(const GreensContext& ctx, double r) { return green_parts(ctx, r).real; }

double plane_wave_sphere_integral(int d, double z) {
    if (d < 2) {
        throw DomainError("plane_wave_sphere_integral: requires d >= 2");
    }
    return special::sphere_surface(d) * special::hyp0f1(0.5 * d, -0.25 * z * z);
}

} // namespace lorentz
