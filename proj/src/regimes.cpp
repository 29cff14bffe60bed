#include "lorentz/regimes.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "lorentz/errors.hpp"
#include "lorentz/medium.hpp"
#include "lorentz/quadrature.hpp"
#include "lorentz/specialfn.hpp"

namespace lorentz {

namespace {

using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;

void require_d2(int d, const char* what) {
    if (d < 2) {
        throw DomainError(std::string(what) + ": requires d >= 2");
    }
}

} // namespace

double mean_free_path(double sigma_pt) {
    if (!(sigma_pt > 0.0)) {
        throw DomainError("mean_free_path: cross section must be positive");
    }
    return 1.0 / sigma_pt;
}

BallisticParams ballistic_params(int d, int n, const ScattererModel& model, double k) {
    return {d, k, n, gas_radius(d, n), point_cross_section(model, d, k)};
}

double born_pair_factor(int d, double k, double radius, double theta) {
    require_d2(d, "born_pair_factor");
    const double qr = 2.0 * k * std::sin(0.5 * theta) * radius;
    const double f = special::hyp0f1(0.5 * d + 1.0, -0.25 * qr * qr);
    return f * f;
}

double born_diff_cross_section(const BallisticParams& p, double theta) {
    const double base = p.n * p.sigma_pt / special::sphere_surface(p.d);
    if (p.n == 1) {
        return base;
    }
    return base * (1.0 + (p.n - 1) * born_pair_factor(p.d, p.k, p.radius, theta));
}

double born_total_factor(int d, double kr) {
    require_d2(d, "born_total_factor");
    if (kr < 0.0) {
        throw DomainError("born_total_factor: kR must be non-negative");
    }
    if (kr == 0.0) {
        return 1.0;
    }
    const int nodes = 8 * static_cast<int>(std::ceil(kr)) + 64;
    const QuadratureRule rule = zonal_sphere_rule(d, nodes);
    const double s = integrate(rule, [&](double t) { return born_pair_factor(d, kr, 1.0, t); });
    return s / special::sphere_surface(d);
}

double born_total_factor_series(int d, double kr) {
    require_d2(d, "born_total_factor_series");
    if (kr > 5.0) {
        throw DomainError("born_total_factor_series: series unreliable for kR > 5");
    }
    const std::array<double, 2> a{0.5 * (d - 1), 0.5 * (d + 1)};
    const std::array<double, 3> b{0.5 * (d + 2), static_cast<double>(d - 1), static_cast<double>(d + 1)};
    return special::hyp_pfq(a, b, -4.0 * kr * kr);
}

double born_total_factor_asymptote(int d, double kr) {
    require_d2(d, "born_total_factor_asymptote");
    const double pref = std::pow(2.0, d) * special::gamma_fn(0.5 * d) *
                        std::pow(special::gamma_fn(0.5 * (d + 2)), 2) /
                        (std::pow(pi, 1.5) * special::gamma_fn(0.5 * (d + 3)));
    return pref * std::pow(kr, 1.0 - d);
}

BornTotal born_total_cross_section(const BallisticParams& p) {
    const double additive = p.n * p.sigma_pt;
    if (p.n == 1) {
        return {additive, additive};
    }
    const double c = born_total_factor(p.d, p.k * p.radius);
    return {additive * (1.0 + (p.n - 1) * c), additive};
}

cplx airy_amplitude(int d, double k, double radius, double theta, AiryVariant variant) {
    require_d2(d, "airy_amplitude");
    const double x = k * radius * (variant == AiryVariant::SmallAngle ? theta : std::sin(theta));
    const double shadow = special::ball_volume(d - 1) * std::pow(radius, d - 1);
    return cplx(0.0, -2.0 * k * shadow * special::hyp0f1(0.5 * (d + 1), -0.25 * x * x));
}

double airy_diff_cross_section(int d, double k, double radius, double theta, AiryVariant variant) {
    const double i0 = 0.5 * pi * special::sphere_surface(d) / std::pow(2.0 * pi, d) * std::pow(k, d - 2);
    return i0 / (k * special::sphere_surface(d)) * std::norm(airy_amplitude(d, k, radius, theta, variant));
}

double airy_first_zero(int d, double k, double radius) {
    require_d2(d, "airy_first_zero");
    return special::bessel_first_zero(0.5 * (d - 1)) / (k * radius);
}

double extinction_cross_section(int d, double radius) {
    require_d2(d, "extinction_cross_section");
    return 2.0 * special::ball_volume(d - 1) * std::pow(radius, d - 1);
}

AngularScales angular_scales(int d, double k, double radius, double ell) {
    if (!(k > 0.0) || !(radius > 0.0) || !(ell > 0.0)) {
        throw DomainError("angular_scales: k, R and l must be positive");
    }
    return {special::bessel_first_zero(0.5 * d) / (k * radius), pi / (k * radius), 1.0 / (k * ell)};
}

OneDAmplitudes one_d_from_coefficients(cplx a_t, cplx a_r, double k, double tol) {
    if (!(k > 0.0)) {
        throw DomainError("one_d_observables: k must be positive");
    }
    const cplx two_ik(0.0, 2.0 * k);
    OneDAmplitudes out;
    out.a_t = a_t;
    out.a_r = a_r;
    out.t_plus = (a_t - 1.0) * two_ik;
    out.t_minus = a_r * two_ik;
    out.sigma = std::norm(a_t - 1.0) + std::norm(a_r);
    out.sigma_alt = 2.0 * (1.0 - a_t.real());
    const double flux = std::norm(a_t) + std::norm(a_r);
    out.conserving = std::abs(flux - 1.0) <= tol && std::abs(out.sigma - out.sigma_alt) <= tol;
    return out;
}

OneDAmplitudes one_d_observables(cplx t_plus, cplx t_minus, double k, double tol) {
    if (!(k > 0.0)) {
        throw DomainError("one_d_observables: k must be positive");
    }
    const cplx two_ik(0.0, 2.0 * k);
    OneDAmplitudes out = one_d_from_coefficients(1.0 + t_plus / two_ik, t_minus / two_ik, k, tol);
    out.t_plus = t_plus;
    out.t_minus = t_minus;
    return out;
}

} // namespace lorentz
