#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "lorentz/errors.hpp"
#include "lorentz/specialfn.hpp"

using namespace lorentz::special;
using lorentz::DomainError;
using lorentz::PoleError;

namespace {

constexpr double pi = std::numbers::pi;

// Power series for J_nu in long double; cancellation limits it to z <= 15.
long double series_j(long double nu, long double z) {
    const long double q = -0.25L * z * z;
    long double term = std::pow(0.5L * z, nu) / std::tgamma(nu + 1.0L);
    long double sum = term;
    for (int k = 1; k < 400; ++k) {
        term *= q / (k * (k + nu));
        sum += term;
        if (std::fabs(term) < 1e-22L * std::fabs(sum) && k > z) {
            break;
        }
    }
    return sum;
}

// Neumann series for integer order Y_n (Abramowitz & Stegun 9.1.11).
long double series_y(int n, long double z) {
    const long double half = 0.5L * z;
    const long double gamma = 0.57721566490153286060651209L;
    long double finite = 0.0L;
    for (int k = 0; k < n; ++k) {
        finite += std::tgamma(static_cast<long double>(n - k)) / std::tgamma(k + 1.0L) *
                  std::pow(half, 2.0L * k - n);
    }
    auto digamma_int = [&](int m) {  // psi(m), m >= 1
        long double s = -gamma;
        for (int j = 1; j < m; ++j) {
            s += 1.0L / j;
        }
        return s;
    };
    long double tail = 0.0L;
    long double power = std::pow(half, static_cast<long double>(n));
    const long double q = -half * half;
    long double fact = 1.0L / std::tgamma(n + 1.0L);  // 1 / (k! (n+k)!)
    for (int k = 0; k < 400; ++k) {
        const long double term = (digamma_int(k + 1) + digamma_int(n + k + 1)) * fact * power;
        tail += term;
        if (k > z && std::fabs(term) < 1e-24L) {
            break;
        }
        power *= q;
        fact /= (k + 1.0L) * (n + k + 1.0L);
    }
    const long double pil = 3.14159265358979323846264338L;
    return -finite / pil + 2.0L / pil * std::log(half) * series_j(n, z) - tail / pil;
}

double hankel_modulus(double nu, double z) {
    const auto jy = bessel_jy(nu, z);
    return std::hypot(jy.j, jy.y);
}

} // namespace

TEST_CASE("bessel_j: trivial and half-integer values") {
    CHECK(bessel_j(0.0, 0.0) == 1.0);
    CHECK(bessel_j(2.0, 0.0) == 0.0);
    const double expected = std::sqrt(2.0 / pi) * std::sin(1.0);
    CHECK(bessel_j(0.5, 1.0) == doctest::Approx(expected).epsilon(1e-15));
    CHECK(bessel_j(0.5, 1.0) == doctest::Approx(0.6713967071418031).epsilon(1e-14));
    CHECK(bessel_y(0.5, 1.0) == doctest::Approx(-0.4310988680183761).epsilon(1e-14));
    CHECK_THROWS_AS(bessel_j(-0.5, 0.0), DomainError);
    CHECK_THROWS_AS(bessel_j(0.0, -1.0), DomainError);
}

TEST_CASE("bessel_y: domain and small-argument logarithm") {
    CHECK_THROWS_AS(bessel_y(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(bessel_y(1.0, -2.0), DomainError);
    const double z = 1e-6;
    const double asymptote = 2.0 / pi * (std::log(z / 2.0) + euler_gamma);
    CHECK(bessel_y(0.0, z) == doctest::Approx(asymptote).epsilon(1e-8));
}

TEST_CASE("bessel_y: integer orders against the Neumann series") {
    CHECK(bessel_y(1.0, 1.0) == doctest::Approx(static_cast<double>(series_y(1, 1.0L))).epsilon(1e-13));
    CHECK(bessel_y(1.0, 1.0) == doctest::Approx(-0.7812128213002887).epsilon(1e-13));
    for (int n : {0, 1, 2, 3}) {
        for (double z : {0.05, 0.3, 1.0, 1.99, 2.0, 3.7, 7.5, 12.0}) {
            CAPTURE(n);
            CAPTURE(z);
            const double ref = static_cast<double>(series_y(n, z));
            CHECK(std::abs(bessel_y(n, z) - ref) <= 1e-12 * hankel_modulus(n, z));
        }
    }
}

TEST_CASE("bessel_j: orders up to 9/2 against the power series") {
    for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.5}) {
        for (double z : {0.01, 0.5, 1.9, 2.1, 5.0, 9.3, 12.5, 14.0}) {
            CAPTURE(nu);
            CAPTURE(z);
            const double ref = static_cast<double>(series_j(nu, z));
            CHECK(std::abs(bessel_j(nu, z) - ref) <= 1e-12 * hankel_modulus(nu, z));
        }
    }
}

TEST_CASE("bessel_jy: order 3/2 closed form across the asymptotic crossover") {
    for (double z : {0.1, 1.0, 4.0, 24.9, 25.1, 50.0, 120.0, 400.0}) {
        CAPTURE(z);
        const double s = std::sqrt(2.0 / (pi * z));
        const double j = s * (std::sin(z) / z - std::cos(z));
        const double y = -s * (std::cos(z) / z + std::sin(z));
        const auto jy = bessel_jy(1.5, z);
        const double tol = (z <= 50.0 ? 1e-12 : 1e-10) * std::hypot(j, y);
        CHECK(std::abs(jy.j - j) <= tol);
        CHECK(std::abs(jy.y - y) <= tol);
    }
}

TEST_CASE("bessel_jy: negative orders use the reflection formulas") {
    const double z = 3.3;
    const auto m = bessel_jy(-0.5, z);
    CHECK(m.j == doctest::Approx(std::sqrt(2.0 / (pi * z)) * std::cos(z)).epsilon(1e-14));
    CHECK(m.y == doctest::Approx(std::sqrt(2.0 / (pi * z)) * std::sin(z)).epsilon(1e-14));
    CHECK(bessel_j(-1.0, z) == doctest::Approx(-bessel_j(1.0, z)).epsilon(1e-15));
    CHECK(bessel_j(-1.5, z) == doctest::Approx(static_cast<double>(series_j(-1.5L, z))).epsilon(1e-12));
}

TEST_CASE("Wronskian and recurrence hold on random arguments") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> uz(0.1, 100.0);
    for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0}) {
        for (int trial = 0; trial < 200; ++trial) {
            const double z = uz(rng);
            CAPTURE(nu);
            CAPTURE(z);
            const auto c = bessel_jy(nu, z);
            const auto lower = bessel_jy(nu - 1.0, z);
            const auto upper = bessel_jy(nu + 1.0, z);
            const double jp = lower.j - nu / z * c.j;
            const double yp = lower.y - nu / z * c.y;
            const double wronskian = c.j * yp - jp * c.y;
            const double expected = 2.0 / (pi * z);
            CHECK(std::abs(wronskian - expected) <= 1e-10 * expected);
            const double scale = hankel_modulus(nu - 1.0, z) + hankel_modulus(nu + 1.0, z);
            CHECK(std::abs(lower.j + upper.j - 2.0 * nu / z * c.j) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("bessel_i: closed form and tabulated value") {
    CHECK(bessel_i(0.0, 1.0) == doctest::Approx(1.2660658777520082).epsilon(1e-14));
    for (double z : {0.2, 2.0, 15.0}) {
        CHECK(bessel_i(0.5, z) == doctest::Approx(std::sqrt(2.0 / (pi * z)) * std::sinh(z)).epsilon(1e-13));
        CHECK(bessel_i(-0.5, z) == doctest::Approx(std::sqrt(2.0 / (pi * z)) * std::cosh(z)).epsilon(1e-13));
    }
}

TEST_CASE("bessel_first_zero") {
    CHECK(bessel_first_zero(1.0) == doctest::Approx(3.8317059702075125).epsilon(1e-14));
    CHECK(bessel_first_zero(1.5) == doctest::Approx(4.4934094579090642).epsilon(1e-14));
    CHECK(bessel_first_zero(0.0) == doctest::Approx(2.404825557695773).epsilon(1e-14));
    CHECK(bessel_first_zero(0.5) == doctest::Approx(pi).epsilon(1e-15));
    for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0, 3.5}) {
        const double z = bessel_first_zero(nu);
        CHECK(std::abs(bessel_j(nu, z)) < 1e-12);
        CHECK(bessel_j(nu, z - 1e-6) > 0.0);
        CHECK(bessel_j(nu, z + 1e-6) < 0.0);
    }
    CHECK_THROWS_AS(bessel_first_zero(-0.5), DomainError);
}

TEST_CASE("hyp0f1 identities") {
    for (int d = 1; d <= 6; ++d) {
        CHECK(hyp0f1(0.5 * d, 0.0) == 1.0);
    }
    CHECK(hyp0f1(1.5, -1.0) == doctest::Approx(std::sin(2.0) / 2.0).epsilon(1e-14));
    CHECK(hyp0f1(1.5, -1.0) == doctest::Approx(0.45464871341284085).epsilon(1e-14));
    CHECK(hyp0f1(1.0, -1.0) == doctest::Approx(0.22389077914123567).epsilon(1e-14));
    // Range |z| <= 1e4 on both branches.
    for (double x : {1.0, 3.9, 4.1, 30.0, 200.0}) {
        CAPTURE(x);
        CHECK(std::abs(hyp0f1(1.5, -x * x / 4.0) - std::sin(x) / x) <= 1e-12 / x);
        CHECK(std::abs(hyp0f1(0.5, -x * x / 4.0) - std::cos(x)) <= 1e-12);
        CHECK(hyp0f1(0.5, x * x / 4.0) == doctest::Approx(std::cosh(x)).epsilon(1e-12));
        CHECK(hyp0f1(1.5, x * x / 4.0) == doctest::Approx(std::sinh(x) / x).epsilon(1e-12));
    }
    CHECK_THROWS_AS(hyp0f1(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(hyp0f1(-2.0, 1.0), DomainError);
}

TEST_CASE("hyp_pfq reduces to elementary functions") {
    const std::vector<double> none;
    CHECK(hyp_pfq(none, none, 1.5) == doctest::Approx(std::exp(1.5)).epsilon(1e-14));
    const std::vector<double> a{1.0};
    CHECK(hyp_pfq(a, none, 0.5) == doctest::Approx(2.0).epsilon(1e-14));  // 1/(1-z)
    const std::vector<double> b{1.5};
    CHECK(hyp_pfq(none, b, -2.25) == doctest::Approx(hyp0f1(1.5, -2.25)).epsilon(1e-14));
}

TEST_CASE("gamma_fn") {
    CHECK(gamma_fn(1.0) == 1.0);
    CHECK(gamma_fn(2.5) == doctest::Approx(3.0 * std::sqrt(pi) / 4.0).epsilon(1e-15));
    CHECK(std::pow(pi, 1.5) / gamma_fn(2.5) == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(gamma_fn(0.0), PoleError);
    CHECK_THROWS_AS(gamma_fn(-3.0), PoleError);
    CHECK(gamma_fn(-0.5) == doctest::Approx(-2.0 * std::sqrt(pi)).epsilon(1e-14));
}

TEST_CASE("ball_volume and sphere_surface") {
    CHECK(ball_volume(1) == doctest::Approx(2.0));
    CHECK(sphere_surface(1) == doctest::Approx(2.0));
    CHECK(ball_volume(2) == doctest::Approx(pi));
    CHECK(sphere_surface(2) == doctest::Approx(2.0 * pi));
    CHECK(ball_volume(3) == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-15));
    CHECK(sphere_surface(3) == doctest::Approx(4.0 * pi).epsilon(1e-15));
    for (int d = 1; d <= 10; ++d) {
        CHECK(sphere_surface(d) == d * ball_volume(d));
    }
    CHECK_THROWS_AS(ball_volume(0), DomainError);
}
