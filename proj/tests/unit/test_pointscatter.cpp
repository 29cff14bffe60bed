#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "lorentz/errors.hpp"
#include "lorentz/greens.hpp"
#include "lorentz/pointscatter.hpp"
#include "lorentz/specialfn.hpp"

using namespace lorentz;
using cplx = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;
constexpr ScattererModel hard(double a) { return {ScatteringKind::HardSphere, a}; }
constexpr ScattererModel delta(double a) { return {ScatteringKind::DeltaLike, a}; }

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        out[i] = std::pow(10.0, lo + (hi - lo) * i / (n - 1));
    }
    return out;
}

} // namespace

TEST_CASE("point cross sections quoted for the two 2D gases") {
    // d=2: I(k,0) = 1/4, so sigma = 4 sin^2(delta) / k with
    // cot(delta) = (2/pi)(ln(alpha k / 2) + gamma) for alpha k << 1.
    const double cot = 2.0 / pi * (std::log(0.005) + special::euler_gamma);
    const double expected = 4.0 / (1.0 + cot * cot) / 10.0;
    CHECK(point_cross_section(hard(1e-3), 2, 10.0) == doctest::Approx(expected).epsilon(1e-4));
    CHECK(point_cross_section(hard(1e-3), 2, 10.0) == doctest::Approx(0.0399).epsilon(0.01));
    CHECK(point_cross_section(hard(0.1), 2, 5.0) == doctest::Approx(0.65).epsilon(0.02));
}

TEST_CASE("delta-like phase shifts in closed form") {
    // d=3: cot = -1/(alpha k); d=1: cot = alpha k.
    CHECK(phase_shift_cot(delta(0.3), 3, 2.0) == doctest::Approx(-1.0 / 0.6).epsilon(1e-14));
    CHECK(phase_shift_cot(delta(0.3), 1, 2.0) == doctest::Approx(0.6).epsilon(1e-14));
    // d=4: cot = -(1/pi)(alpha k / 2)^{-2}.
    CHECK(phase_shift_cot(delta(0.1), 4, 3.0) == doctest::Approx(-1.0 / (pi * 0.15 * 0.15)).epsilon(1e-13));
    // d=2 hard sphere reaches the log form at small alpha k.
    const double ak = 1e-4;
    const double dl = 2.0 / pi * (std::log(ak / 2.0) + special::euler_gamma);
    CHECK(phase_shift_cot(hard(ak), 2, 1.0) == doctest::Approx(dl).epsilon(0.01));
}

TEST_CASE("unitarity Im(1/F) = I(k,0) and |S| = 1") {
    for (int d = 1; d <= 6; ++d) {
        for (double k : log_grid(-2.0, 3.0, 41)) {
            for (const auto& model : {hard(1e-3), hard(0.1), delta(1e-3), delta(0.1)}) {
                const double i0 = green_imag_at_origin(d, k);
                const cplx f = amplitude(model, d, k);
                const cplx finv = inverse_amplitude(model, d, k);
                CHECK(finv.imag() == doctest::Approx(i0).epsilon(1e-13));
                CHECK((1.0 / f).imag() == doctest::Approx(i0).epsilon(1e-12));
                const cplx s = s_matrix_element(model, d, k);
                CHECK(std::abs(std::abs(s) - 1.0) < 1e-12);
                CHECK(std::abs(s - (1.0 - 2.0 * cplx(0.0, 1.0) * i0 * f)) < 1e-12);
                const double sigma = point_cross_section(model, d, k);
                CHECK(sigma >= 0.0);
                CHECK(sigma <= point_cross_section_bound(d, k) * (1.0 + 1e-14));
                CHECK(sigma == doctest::Approx(i0 * std::norm(f) / k).epsilon(1e-12));
                CHECK(sigma == doctest::Approx(-f.imag() / k).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("S from cot delta") {
    const double cot = phase_shift_cot(hard(0.2), 3, 1.5);
    const cplx expected = (cot + cplx(0.0, 1.0)) / (cot - cplx(0.0, 1.0));
    CHECK(std::abs(s_matrix_element(hard(0.2), 3, 1.5) - expected) < 1e-14);
}

TEST_CASE("one-dimensional bound is 2") {
    for (double k : log_grid(-2.0, 2.0, 9)) {
        CHECK(point_cross_section_bound(1, k) == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("hard-sphere and delta-like agree at low energy") {
    for (int d = 1; d <= 4; ++d) {
        for (double ak : {1e-5, 1e-4, 1e-3, 5e-3}) {
            const double a = point_cross_section(hard(ak), d, 1.0);
            const double b = point_cross_section(delta(ak), d, 1.0);
            CHECK(a == doctest::Approx(b).epsilon(0.01));
        }
    }
}

TEST_CASE("zero-energy behaviour by dimension") {
    const auto m = hard(1e-2);
    CHECK(point_cross_section(m, 2, 1e-6) > point_cross_section(m, 2, 1e-3));
    CHECK(point_cross_section(m, 2, 1e-9) > point_cross_section(m, 2, 1e-6));
    // d=3: sigma -> 4 pi alpha^2 as k -> 0.
    CHECK(point_cross_section(m, 3, 1e-7) == doctest::Approx(4.0 * pi * 1e-4).epsilon(1e-6));
    // d=1: cot(delta) -> 0, so sigma -> the bound 2.
    CHECK(point_cross_section(m, 1, 1e-8) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("hard-sphere transparency at the Bessel zero") {
    const double j0 = special::bessel_first_zero(0.0);
    const ScattererModel m = hard(1e-3);
    const double k = j0 / 1e-3;
    const PhaseShift ps = phase_shift(m, 2, k);
    CHECK(std::abs(ps.sin_part) < 1e-14);
    CHECK(point_cross_section(m, 2, k) < 1e-28);
    CHECK(std::abs(amplitude(m, 2, k)) < 1e-13);
    // Cross section has a local minimum there.
    CHECK(point_cross_section(m, 2, k * 0.99) > point_cross_section(m, 2, k));
    CHECK(point_cross_section(m, 2, k * 1.01) > point_cross_section(m, 2, k));
    // d=3: J_{1/2}(alpha k) = 0 at alpha k = pi exactly in closed form.
    const PhaseShift ps3 = phase_shift(hard(1.0), 3, pi);
    CHECK(std::abs(ps3.sin_part) < 1e-15);
}

TEST_CASE("transparent scatterer has no inverse amplitude") {
    const PhaseShift transparent{0.0, 1.0};
    CHECK(amplitude(transparent, 2, 1.0) == cplx(0.0, 0.0));
    CHECK_THROWS_AS(inverse_amplitude(transparent, 2, 1.0), TransparentScattererError);
    CHECK_THROWS_AS(inverse_amplitude(transparent, 2, 1.0), DomainError);
    const PhaseShift resonant{1.0, 0.0};
    CHECK(std::abs(amplitude(resonant, 3, 2.0) - cplx(0.0, -1.0) / green_imag_at_origin(3, 2.0)) < 1e-15);
}

TEST_CASE("differential cross section is isotropic") {
    for (int d = 1; d <= 4; ++d) {
        const auto m = delta(0.05);
        CHECK(diff_cross_section_point(m, d, 3.0) * special::sphere_surface(d) ==
              doctest::Approx(point_cross_section(m, d, 3.0)).epsilon(1e-15));
    }
}

TEST_CASE("validity advisory") {
    CHECK_FALSE(outside_low_energy_regime(hard(1e-3), 10.0));
    CHECK(outside_low_energy_regime(hard(0.1), 5.0));
}

TEST_CASE("model names round-trip") {
    CHECK(parse_scattering_kind(to_string(ScatteringKind::HardSphere)) == ScatteringKind::HardSphere);
    CHECK(parse_scattering_kind(to_string(ScatteringKind::DeltaLike)) == ScatteringKind::DeltaLike);
    CHECK_THROWS_AS(parse_scattering_kind("soft"), ValidationError);
}

TEST_CASE("point scatterer argument errors") {
    CHECK_THROWS_AS(amplitude(hard(-1.0), 2, 1.0), DomainError);
    CHECK_THROWS_AS(amplitude(hard(1.0), 2, 0.0), DomainError);
    CHECK_THROWS_AS(amplitude(hard(1.0), 0, 1.0), DomainError);
}

TEST_CASE("square-well scattering length in closed form") {
    // d=2: alpha = b exp(J_0(wb) / (wb J_1(wb))).
    const double w = 1.1;
    const double b = 0.9;
    const double z = w * b;
    const double expected = b * std::exp(special::bessel_j(0.0, z) / (z * special::bessel_j(1.0, z)));
    CHECK(scattering_length(SquareWell{w, b}, 2) == doctest::Approx(expected).epsilon(1e-14));
    // d=3: psi = sin(wr)/(wr), alpha = b (1 - tan(z)/z).
    const double z3 = 2.5;
    CHECK(scattering_length(SquareWell{z3, 1.0}, 3) == doctest::Approx(1.0 - std::tan(z3) / z3).epsilon(1e-13));
    // d=1: psi = cos(wr), alpha = b + cot(z)/w.
    CHECK(scattering_length(SquareWell{0.5, 1.0}, 1) == doctest::Approx(1.0 + 1.0 / (0.5 * std::tan(0.5))).epsilon(1e-13));
}

TEST_CASE("hard-wall limit of a barrier gives alpha = b") {
    CHECK(scattering_length(Barrier{1e7, 0.7}, 3) == doctest::Approx(0.7).epsilon(1e-6));
    // d=3 barrier closed form: psi = sinh(wr)/(wr), alpha = b (1 - tanh(z)/z).
    const double z = 3.0;
    CHECK(scattering_length(Barrier{z, 1.0}, 3) == doctest::Approx(1.0 - std::tanh(z) / z).epsilon(1e-13));
    for (int d : {2, 4}) {
        const double a = scattering_length(Barrier{1e4, 1.0}, d);
        CHECK(a == doctest::Approx(1.0).epsilon(1e-3));
        CHECK(a < 1.0);
    }
}

TEST_CASE("Numerov tabulated well reproduces closed forms") {
    for (int d = 1; d <= 4; ++d) {
        for (double wb : {0.5, 1.0, 2.0, 3.0, 4.5}) {
            const double b = 1.3;
            const double w = wb / b;
            double closed = 0.0;
            try {
                closed = scattering_length(SquareWell{w, b}, d);
            } catch (const ModelError&) {
                CHECK_THROWS_AS(scattering_length(Tabulated{{-w * w, -w * w}, b}, d), ModelError);
                continue;
            }
            const double numerov = scattering_length(Tabulated{std::vector<double>(33, -w * w), b}, d);
            CHECK(numerov == doctest::Approx(closed).epsilon(1e-8));
        }
        const double barrier = scattering_length(Barrier{2.0, 1.0}, d);
        CHECK(scattering_length(Tabulated{{4.0, 4.0, 4.0}, 1.0}, d) == doctest::Approx(barrier).epsilon(1e-8));
    }
}

TEST_CASE("tabulated profile is independent of resampling the same ramp") {
    // Attractive in d=1 and repulsive above, where alpha exists for a weak ramp.
    for (int d = 1; d <= 4; ++d) {
        const double c = d == 1 ? -3.0 : 3.0;
        std::vector<double> fine(101);
        for (int i = 0; i <= 100; ++i) {
            fine[i] = c * (1.0 - i / 100.0);
        }
        const double a = scattering_length(Tabulated{{c, 0.0}, 1.0}, d);
        const double b = scattering_length(Tabulated{fine, 1.0}, d);
        CHECK(a == doctest::Approx(b).epsilon(1e-10));
    }
}

TEST_CASE("scattering length undefined branch") {
    // d=3 well with tan(z)/z > 1 hits 1 + psi/(b psi') <= 0.
    CHECK_THROWS_AS(scattering_length(SquareWell{1.0, 1.0}, 3), ModelError);
    CHECK_THROWS_AS(scattering_length(SquareWell{-1.0, 1.0}, 3), ValidationError);
    CHECK_THROWS_AS(scattering_length(Tabulated{{1.0}, 1.0}, 3), ValidationError);
    CHECK(scattering_length_from_ratio(1e-300, 2.0, 3) == doctest::Approx(2.0));
}
