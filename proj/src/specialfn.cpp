#include "lorentz/specialfn.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "lorentz/errors.hpp"

namespace lorentz::special {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double fpmin = std::numeric_limits<double>::min() / eps;
constexpr int max_iterations = 100000;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

bool is_integer(double x) { return x == std::floor(x); }

// Hankel asymptotic expansion. Returns false when the series has not
// reached full precision before its terms start to grow.
bool bessel_jy_asymptotic(double nu, double z, BesselJY& out) {
    const double mu = 4.0 * nu * nu;
    double p = 1.0;
    double q = 0.0;
    double term = 1.0;
    double previous = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (8.0 * k * z);
        const double magnitude = std::abs(term);
        if (magnitude > previous && k > nu) {
            break;
        }
        previous = magnitude;
        // k = 1, 2, 3, 4 contribute to q, p, q, p with signs +, -, -, +.
        const double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
        if (k % 2 == 1) {
            q += sign * term;
        } else {
            p += sign * term;
        }
        if (magnitude < 0.5 * eps * (std::abs(p) + std::abs(q))) {
            converged = true;
            break;
        }
        if (term == 0.0) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        return false;
    }
    const double chi = z - (0.5 * nu + 0.25) * pi;
    const double scale = std::sqrt(2.0 / (pi * z));
    const double c = std::cos(chi);
    const double s = std::sin(chi);
    out.j = scale * (p * c - q * s);
    out.y = scale * (p * s + q * c);
    return true;
}

// 1/Gamma(1 +- mu) combinations needed by Temme's series, |mu| <= 1/2.
struct TemmeGammas {
    double gam1;
    double gam2;
    double gampl;
    double gammi;
};

TemmeGammas temme_gammas(double mu) {
    TemmeGammas g{};
    g.gampl = 1.0 / std::tgamma(1.0 + mu);
    g.gammi = 1.0 / std::tgamma(1.0 - mu);
    g.gam2 = 0.5 * (g.gammi + g.gampl);
    if (std::abs(mu) < 1e-3) {
        // Even part of the Taylor series of 1/Gamma(1+x).
        constexpr double c2 = 0.5772156649015329;
        constexpr double c4 = -0.0420026350340952;
        constexpr double c6 = -0.0421977345555443;
        const double m2 = mu * mu;
        g.gam1 = -(c2 + m2 * (c4 + m2 * c6));
    } else {
        g.gam1 = (g.gammi - g.gampl) / (2.0 * mu);
    }
    return g;
}

// Temme series (x < 2) / Steed continued fraction (x >= 2) for nu >= 0,
// x > 0, after the classic bessjy layout: CF1 for J'/J, downward recurrence
// to |mu| <= 1/2, Y via the series or CF2, upward recurrence for Y.
BesselJY bessel_jy_temme_steed(double nu, double x) {
    constexpr double xmin = 2.0;
    const int nl = x < xmin ? static_cast<int>(nu + 0.5)
                            : std::max(0, static_cast<int>(nu - x + 1.5));
    const double xmu = nu - nl;
    const double xmu2 = xmu * xmu;
    const double xi = 1.0 / x;
    const double xi2 = 2.0 * xi;
    const double w = xi2 / pi;

    // CF1: f_nu = J'_nu / J_nu.
    int isign = 1;
    double h = nu * xi;
    if (h < fpmin) {
        h = fpmin;
    }
    double b = xi2 * nu;
    double d = 0.0;
    double c = h;
    int i = 0;
    for (; i < max_iterations; ++i) {
        b += xi2;
        d = b - d;
        if (std::abs(d) < fpmin) {
            d = fpmin;
        }
        c = b - 1.0 / c;
        if (std::abs(c) < fpmin) {
            c = fpmin;
        }
        d = 1.0 / d;
        const double del = c * d;
        h *= del;
        if (d < 0.0) {
            isign = -isign;
        }
        if (std::abs(del - 1.0) <= eps) {
            break;
        }
    }
    if (i == max_iterations) {
        throw SolverError("bessel_jy: continued fraction CF1 did not converge");
    }

    double rjl = isign * fpmin;
    double rjpl = h * rjl;
    const double rjl1 = rjl;
    const double rjp1 = rjpl;
    double fact = nu * xi;
    for (int l = nl - 1; l >= 0; --l) {
        const double rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if (rjl == 0.0) {
        rjl = eps;
    }
    const double f = rjpl / rjl;

    double rjmu = 0.0;
    double rymu = 0.0;
    double ry1 = 0.0;
    if (x < xmin) {
        const double x2 = 0.5 * x;
        const double pimu = pi * xmu;
        const double fact0 = std::abs(pimu) < eps ? 1.0 : pimu / std::sin(pimu);
        const double dlog = -std::log(x2);
        const double e = xmu * dlog;
        const double fact2 = std::abs(e) < eps ? 1.0 : std::sinh(e) / e;
        const TemmeGammas g = temme_gammas(xmu);
        double ff = 2.0 / pi * fact0 * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * dlog);
        const double ee = std::exp(e);
        double p = ee / (g.gampl * pi);
        double q = 1.0 / (ee * pi * g.gammi);
        const double pimu2 = 0.5 * pimu;
        const double fact3 = std::abs(pimu2) < eps ? 1.0 : std::sin(pimu2) / pimu2;
        const double r = pi * pimu2 * fact3 * fact3;
        double cc = 1.0;
        const double dd = -x2 * x2;
        double sum = ff + r * q;
        double sum1 = p;
        int k = 1;
        for (; k < max_iterations; ++k) {
            ff = (k * ff + p + q) / (k * k - xmu2);
            cc *= dd / k;
            p /= k - xmu;
            q /= k + xmu;
            const double del = cc * (ff + r * q);
            sum += del;
            const double del1 = cc * p - k * del;
            sum1 += del1;
            if (std::abs(del) < (1.0 + std::abs(sum)) * eps) {
                break;
            }
        }
        if (k == max_iterations) {
            throw SolverError("bessel_jy: Temme series did not converge");
        }
        rymu = -sum;
        ry1 = -sum1 * xi2;
        const double rymup = xmu * xi * rymu - ry1;
        rjmu = w / (rymup - f * rymu);
    } else {
        // CF2: p + iq = (J' + iY') / (J + iY), Steed/Lentz.
        double a = 0.25 - xmu2;
        double p = -0.5 * xi;
        double q = 1.0;
        const double br = 2.0 * x;
        double bi = 2.0;
        double fct = a * xi / (p * p + q * q);
        double cr = br + q * fct;
        double ci = bi + p * fct;
        double den = br * br + bi * bi;
        double dr = br / den;
        double di = -bi / den;
        double dlr = cr * dr - ci * di;
        double dli = cr * di + ci * dr;
        double temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        int k = 1;
        for (; k < max_iterations; ++k) {
            a += 2 * k;
            bi += 2.0;
            dr = a * dr + br;
            di = a * di + bi;
            if (std::abs(dr) + std::abs(di) < fpmin) {
                dr = fpmin;
            }
            fct = a / (cr * cr + ci * ci);
            cr = br + cr * fct;
            ci = bi - ci * fct;
            if (std::abs(cr) + std::abs(ci) < fpmin) {
                cr = fpmin;
            }
            den = dr * dr + di * di;
            dr /= den;
            di /= -den;
            dlr = cr * dr - ci * di;
            dli = cr * di + ci * dr;
            temp = p * dlr - q * dli;
            q = p * dli + q * dlr;
            p = temp;
            if (std::abs(dlr - 1.0) + std::abs(dli) <= eps) {
                break;
            }
        }
        if (k == max_iterations) {
            throw SolverError("bessel_jy: continued fraction CF2 did not converge");
        }
        const double gam = (p - f) / q;
        rjmu = std::sqrt(w / ((p - f) * gam + q));
        rjmu = std::copysign(rjmu, rjl);
        rymu = rjmu * gam;
        const double rymup = rymu * (p + q / gam);
        ry1 = xmu * xi * rymu - rymup;
    }

    const double scale = rjmu / rjl;
    BesselJY out{};
    out.j = rjl1 * scale;
    (void)rjp1;
    for (int l = 1; l <= nl; ++l) {
        const double rytemp = (xmu + l) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = rytemp;
    }
    out.y = rymu;
    return out;
}

BesselJY bessel_jy_nonnegative(double nu, double z) {
    if (nu == 0.5) {
        const double scale = std::sqrt(2.0 / (pi * z));
        return {scale * std::sin(z), -scale * std::cos(z)};
    }
    if (z >= std::max(25.0, 2.0 * nu * nu)) {
        BesselJY out{};
        if (bessel_jy_asymptotic(nu, z, out)) {
            return out;
        }
    }
    return bessel_jy_temme_steed(nu, z);
}

} // namespace

BesselJY bessel_jy(double nu, double z) {
    if (!(z > 0.0) || !std::isfinite(z)) {
        throw DomainError("bessel_jy: argument must be finite and positive, got " + std::to_string(z));
    }
    if (nu >= 0.0) {
        return bessel_jy_nonnegative(nu, z);
    }
    if (nu == -0.5) {
        const double scale = std::sqrt(2.0 / (pi * z));
        return {scale * std::cos(z), scale * std::sin(z)};
    }
    const double m = -nu;
    const BesselJY pos = bessel_jy_nonnegative(m, z);
    if (is_integer(m)) {
        const double sign = std::fmod(m, 2.0) == 0.0 ? 1.0 : -1.0;
        return {sign * pos.j, sign * pos.y};
    }
    const double c = std::cos(m * pi);
    const double s = std::sin(m * pi);
    return {c * pos.j - s * pos.y, s * pos.j + c * pos.y};
}

double bessel_j(double nu, double z) {
    if (z < 0.0 || !std::isfinite(z)) {
        throw DomainError("bessel_j: argument must be finite and non-negative");
    }
    if (z == 0.0) {
        if (nu == 0.0) {
            return 1.0;
        }
        if (nu > 0.0 || is_integer(nu)) {
            return 0.0;
        }
        throw DomainError("bessel_j: J_nu(0) diverges for negative non-integer order");
    }
    return bessel_jy(nu, z).j;
}

double bessel_y(double nu, double z) {
    if (!(z > 0.0)) {
        throw DomainError("bessel_y: Y_nu diverges at z <= 0");
    }
    return bessel_jy(nu, z).y;
}

double bessel_i(double nu, double z) {
    if (z < 0.0 || !(nu > -1.0)) {
        throw DomainError("bessel_i: requires z >= 0 and nu > -1");
    }
    if (z == 0.0) {
        return nu == 0.0 ? 1.0 : 0.0;
    }
    const double half = 0.5 * z;
    const double q = half * half;
    double term = std::exp(nu * std::log(half) - std::lgamma(nu + 1.0));
    double sum = term;
    for (int k = 1; k < max_iterations; ++k) {
        term *= q / (k * (k + nu));
        sum += term;
        if (term < eps * sum) {
            return sum;
        }
    }
    throw SolverError("bessel_i: series did not converge");
}

double bessel_first_zero(double nu) {
    if (nu < 0.0) {
        throw DomainError("bessel_first_zero: requires nu >= 0");
    }
    // J_nu > 0 on (0, j_nu) and j_nu > nu.
    double lo = std::max(nu, 0.25);
    double flo = bessel_j(nu, lo);
    double hi = lo;
    double fhi = flo;
    constexpr double step = 0.25;
    for (int i = 0; i < 100000 && fhi > 0.0; ++i) {
        lo = hi;
        flo = fhi;
        hi = lo + step;
        fhi = bessel_j(nu, hi);
    }
    if (fhi > 0.0) {
        throw SolverError("bessel_first_zero: no sign change found");
    }
    // Bisection down to adjacent doubles.
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double fmid = bessel_j(nu, mid);
        if (fmid == 0.0) {
            return mid;
        }
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }
    return std::abs(flo) < std::abs(fhi) ? lo : hi;
}

double gamma_fn(double x) {
    if (is_nonpositive_integer(x)) {
        throw PoleError("gamma_fn: pole at non-positive integer " + std::to_string(x));
    }
    return std::tgamma(x);
}

double hyp0f1(double a, double z) {
    if (is_nonpositive_integer(a)) {
        throw DomainError("hyp0f1: a must not be a non-positive integer");
    }
    if (z < -4.0) {
        const double x = 2.0 * std::sqrt(-z);
        const double nu = a - 1.0;
        return gamma_fn(a) * std::pow(0.5 * x, -nu) * bessel_j(nu, x);
    }
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < max_iterations; ++n) {
        term *= z / ((a + n - 1) * n);
        sum += term;
        if (std::abs(term) <= eps * std::abs(sum)) {
            return sum;
        }
    }
    throw SolverError("hyp0f1: series did not converge");
}

double hyp_pfq(std::span<const double> a, std::span<const double> b, double z) {
    for (double bj : b) {
        if (is_nonpositive_integer(bj)) {
            throw DomainError("hyp_pfq: lower parameter is a non-positive integer");
        }
    }
    double term = 1.0;
    double sum = 1.0;
    for (int n = 0; n < max_iterations; ++n) {
        double ratio = z / (n + 1);
        for (double ai : a) {
            ratio *= ai + n;
        }
        for (double bj : b) {
            ratio /= bj + n;
        }
        term *= ratio;
        sum += term;
        if (term == 0.0) {
            return sum;
        }
        // Stop only once the terms are shrinking.
        if (std::abs(ratio) < 1.0 && std::abs(term) <= eps * std::abs(sum)) {
            return sum;
        }
    }
    throw SolverError("hyp_pfq: series did not converge");
}

double ball_volume(int d) {
    if (d < 1) {
        throw DomainError("ball_volume: dimension must be >= 1");
    }
    return std::pow(pi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

double sphere_surface(int d) { return d * ball_volume(d); }

} // namespace lorentz::special
