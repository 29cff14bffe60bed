#include "lorentz/pointscatter.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lorentz/errors.hpp"
#include "lorentz/greens.hpp"
#include "lorentz/specialfn.hpp"

namespace lorentz {

namespace {

using cplx = std::complex<double>;

void check_args(const ScattererModel& model, int d, double k) {
    if (d < 1) {
        throw DomainError("point scatterer: dimension must be >= 1");
    }
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw DomainError("point scatterer: wavenumber must be real and positive");
    }
    if (!(model.alpha > 0.0) || !std::isfinite(model.alpha)) {
        throw DomainError("point scatterer: scattering length must be positive");
    }
}

double delta_like_cot(int d, double ak) {
    if (d == 2) {
        return 2.0 / std::numbers::pi * (std::log(0.5 * ak) + special::euler_gamma);
    }
    const double nu = 0.5 * (d - 2);
    return -special::gamma_fn(nu) * special::gamma_fn(0.5 * d) / std::numbers::pi *
           std::pow(0.5 * ak, 2.0 - d);
}

} // namespace

std::string_view to_string(ScatteringKind kind) {
    return kind == ScatteringKind::HardSphere ? "hard-sphere" : "delta-like";
}

ScatteringKind parse_scattering_kind(std::string_view text) {
    if (text == "hard-sphere") {
        return ScatteringKind::HardSphere;
    }
    if (text == "delta-like") {
        return ScatteringKind::DeltaLike;
    }
    throw ValidationError("unknown scatterer model '" + std::string(text) +
                          "' (expected hard-sphere or delta-like)");
}

PhaseShift phase_shift(const ScattererModel& model, int d, double k) {
    check_args(model, d, k);
    const double ak = model.alpha * k;
    double s = 1.0;
    double c = 0.0;
    if (model.kind == ScatteringKind::HardSphere) {
        const auto jy = special::bessel_jy(0.5 * (d - 2), ak);
        s = jy.j;
        c = jy.y;
    } else {
        c = delta_like_cot(d, ak);
    }
    const double norm = std::hypot(s, c);
    return {s / norm, c / norm};
}

double phase_shift_cot(const ScattererModel& model, int d, double k) {
    const PhaseShift ps = phase_shift(model, d, k);
    if (ps.sin_part == 0.0) {
        throw PoleError("phase_shift_cot: cot(delta) diverges at this alpha k");
    }
    return ps.cos_part / ps.sin_part;
}

cplx amplitude(const PhaseShift& ps, int d, double k) {
    const double i0 = green_imag_at_origin(d, k);
    // F = s / (I0 (i s - c)) with s^2 + c^2 = 1.
    return ps.sin_part * cplx(-ps.cos_part, -ps.sin_part) / i0;
}

cplx inverse_amplitude(const PhaseShift& ps, int d, double k) {
    if (ps.sin_part == 0.0) {
        throw TransparentScattererError("scatterer transparent at this k (F = 0)");
    }
    const double i0 = green_imag_at_origin(d, k);
    return {-i0 * ps.cos_part / ps.sin_part, i0};
}

cplx amplitude(const ScattererModel& model, int d, double k) {
    return amplitude(phase_shift(model, d, k), d, k);
}

cplx inverse_amplitude(const ScattererModel& model, int d, double k) {
    return inverse_amplitude(phase_shift(model, d, k), d, k);
}

cplx s_matrix_element(const ScattererModel& model, int d, double k) {
    const PhaseShift ps = phase_shift(model, d, k);
    const cplx num(ps.cos_part, ps.sin_part);
    return num / std::conj(num);
}

double point_cross_section(const ScattererModel& model, int d, double k) {
    const PhaseShift ps = phase_shift(model, d, k);
    return ps.sin_part * ps.sin_part * point_cross_section_bound(d, k);
}

double point_cross_section_bound(int d, double k) {
    return 1.0 / (k * green_imag_at_origin(d, k));
}

double diff_cross_section_point(const ScattererModel& model, int d, double k) {
    return point_cross_section(model, d, k) / special::sphere_surface(d);
}

bool outside_low_energy_regime(const ScattererModel& model, double k) {
    return model.alpha * k > 0.1;
}

namespace {

constexpr int numerov_steps = 2048;

double interpolate(const Tabulated& tab, double r) {
    const auto n = tab.u.size();
    const double x = r / tab.b * static_cast<double>(n - 1);
    auto j = static_cast<std::size_t>(x);
    if (j >= n - 1) {
        return tab.u.back();
    }
    const double t = x - static_cast<double>(j);
    return (1.0 - t) * tab.u[j] + t * tab.u[j + 1];
}

// I_{nu+1}(z) / I_nu(z) by backward recurrence on r_n = I_{n+1} / I_n.
double bessel_i_ratio(double nu, double z) {
    const int top = static_cast<int>(std::ceil(z)) + 100;
    double r = 0.0;
    for (int j = top; j >= 1; --j) {
        r = 1.0 / (2.0 * (nu + j) / z + r);
    }
    return r;
}

double numerov_ratio(const Tabulated& tab, int d) {
    if (tab.u.size() < 2) {
        throw ValidationError("tabulated potential needs at least two samples");
    }
    if (!(tab.b > 0.0)) {
        throw ValidationError("potential range b must be positive");
    }
    const double h = tab.b / numerov_steps;
    const double centrifugal = 0.25 * (d - 1) * (d - 3);
    const double p = 0.5 * (d - 1);
    auto u = [&](double r) { return interpolate(tab, r); };

    std::vector<double> psi(numerov_steps + 1);

    // RK4 on (psi, psi') up to r = start_steps h; psi''(0) = u(0) psi(0) / d.
    constexpr int start_steps = 256;
    constexpr int substeps = 4;
    auto rhs = [&](double r, double y0, double y1) {
        if (r == 0.0) {
            return u(0.0) * y0 / d;
        }
        return u(r) * y0 - (d - 1) * y1 / r;
    };
    double y0 = 1.0;
    double y1 = 0.0;
    psi[0] = 1.0;
    const double hs = h / substeps;
    for (int n = 0; n < start_steps; ++n) {
        for (int j = 0; j < substeps; ++j) {
            const double r = n * h + j * hs;
            const double k1a = y1;
            const double k1b = rhs(r, y0, y1);
            const double k2a = y1 + 0.5 * hs * k1b;
            const double k2b = rhs(r + 0.5 * hs, y0 + 0.5 * hs * k1a, k2a);
            const double k3a = y1 + 0.5 * hs * k2b;
            const double k3b = rhs(r + 0.5 * hs, y0 + 0.5 * hs * k2a, k3a);
            const double k4a = y1 + hs * k3b;
            const double k4b = rhs(r + hs, y0 + hs * k3a, k4a);
            y0 += hs / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
            y1 += hs / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
        }
        psi[n + 1] = y0;
    }

    // Numerov on y = r^p psi, y'' = f y, in summed form:
    // z = (1 - h^2 f / 12) y, z_{n+1} - 2 z_n + z_{n-1} = h^2 f_n y_n.
    auto f = [&](double r) { return u(r) + centrifugal / (r * r); };
    auto weight = [&](double r) { return 1.0 - h * h / 12.0 * f(r); };
    const double r_a = (start_steps - 1) * h;
    const double r_b = start_steps * h;
    double z_cur = weight(r_b) * std::pow(r_b, p) * psi[start_steps];
    double diff = z_cur - weight(r_a) * std::pow(r_a, p) * psi[start_steps - 1];
    for (int n = start_steps; n < numerov_steps; ++n) {
        const double r = n * h;
        const double y = std::pow(r, p) * psi[n];
        diff += h * h * f(r) * y;
        z_cur += diff;
        const double r_next = r + h;
        psi[n + 1] = z_cur / weight(r_next) / std::pow(r_next, p);
    }
    const int m = numerov_steps;
    const double dpsi =
        (25.0 * psi[m] - 48.0 * psi[m - 1] + 36.0 * psi[m - 2] - 16.0 * psi[m - 3] + 3.0 * psi[m - 4]) /
        (12.0 * h);
    if (dpsi == 0.0) {
        throw ModelError("scattering length: psi'(b) vanishes");
    }
    return psi[m] / dpsi;
}

} // namespace

double log_derivative_inverse(const RadialPotential& pot, int d) {
    if (d < 1) {
        throw DomainError("scattering length: dimension must be >= 1");
    }
    const double nu = 0.5 * (d - 2);
    if (const auto* sw = std::get_if<SquareWell>(&pot)) {
        if (!(sw->w > 0.0) || !(sw->b > 0.0)) {
            throw ValidationError("square well needs w > 0 and b > 0");
        }
        const double z = sw->w * sw->b;
        const double jnext = special::bessel_j(nu + 1.0, z);
        if (jnext == 0.0) {
            throw ModelError("scattering length: psi'(b) vanishes");
        }
        return -special::bessel_j(nu, z) / (sw->w * jnext);
    }
    if (const auto* bar = std::get_if<Barrier>(&pot)) {
        if (!(bar->w > 0.0) || !(bar->b > 0.0)) {
            throw ValidationError("barrier needs w > 0 and b > 0");
        }
        return 1.0 / (bar->w * bessel_i_ratio(nu, bar->w * bar->b));
    }
    return numerov_ratio(std::get<Tabulated>(pot), d);
}

double scattering_length_from_ratio(double ratio, double b, int d) {
    if (d == 2) {
        return b * std::exp(-ratio / b);
    }
    const double base = 1.0 + (d - 2) * ratio / b;
    if (!(base > 0.0)) {
        throw ModelError("scattering length undefined: 1 + (d-2) psi/(b psi') <= 0");
    }
    return b * std::pow(base, -1.0 / (d - 2));
}

double scattering_length(const RadialPotential& pot, int d) {
    const double b = std::visit([](const auto& p) { return p.b; }, pot);
    return scattering_length_from_ratio(log_derivative_inverse(pot, d), b, d);
}

} // namespace lorentz
