#pragma once

// Closed-form references: ballistic (first-order Born) averages, Airy
// diffraction by an opaque ball, the extinction cross section, angular
// scales, and the one-dimensional transmission/reflection picture.

#include <complex>

#include "lorentz/pointscatter.hpp"

namespace lorentz {

/// l = 1 / (n sigma_pt) at unit density.
double mean_free_path(double sigma_pt);

struct BallisticParams {
    int d = 2;
    double k = 1.0;
    int n = 1;
    double radius = 1.0;
    double sigma_pt = 0.0;

    /// n sigma_pt R at unit density.
    double scale() const { return sigma_pt * radius; }
    /// The Born formulas are advisory once n sigma_pt R >= 1.
    bool beyond_ballistic() const { return scale() >= 1.0; }
};

/// Parameters of a unit-density gas of N scatterers with R = gas_radius(d, N).
BallisticParams ballistic_params(int d, int n, const ScattererModel& model, double k);

/// c = [0F1(d/2 + 1; -(qR)^2/4)]^2, q = 2k sin(theta/2). d >= 2.
double born_pair_factor(int d, double k, double radius, double theta);

/// N (sigma_pt / S_d) [1 + (N - 1) c].
double born_diff_cross_section(const BallisticParams& p, double theta);

/// C = (1/S_d) * surface integral of c, by zonal Gauss-Legendre quadrature
/// with 8 ceil(kR) + 64 nodes. C(0) = 1.
double born_total_factor(int d, double kr);

/// 2F3((d-1)/2, (d+1)/2; (d+2)/2, d-1, d+1; -4 (kR)^2) summed directly.
/// Only trustworthy for kR <= 2; throws DomainError above kR = 5.
double born_total_factor_series(int d, double kr);

/// Large-kR power law 2^d G(d/2) G((d+2)/2)^2 / (pi^{3/2} G((d+3)/2)) (kR)^{1-d}.
double born_total_factor_asymptote(int d, double kr);

struct BornTotal {
    double full;      ///< N sigma_pt [1 + (N - 1) C]
    double additive;  ///< N sigma_pt
};

BornTotal born_total_cross_section(const BallisticParams& p);

enum class AiryVariant { SmallAngle, ExactSine };

/// T_A = -2ik V_{d-1} R^{d-1} 0F1((d+1)/2; -x^2/4), x = kR theta (or kR sin theta).
std::complex<double> airy_amplitude(int d, double k, double radius, double theta,
                                    AiryVariant variant = AiryVariant::SmallAngle);

/// [(R/theta)^{(d-1)/2} J_{(d-1)/2}(kR theta)]^2, i.e. I(k,0)/(k S_d) |T_A|^2.
double airy_diff_cross_section(int d, double k, double radius, double theta,
                               AiryVariant variant = AiryVariant::SmallAngle);

/// First zero of the Airy pattern, j_{(d-1)/2} / (kR).
double airy_first_zero(int d, double k, double radius);

/// 2 V_{d-1} R^{d-1}.
double extinction_cross_section(int d, double radius);

struct AngularScales {
    double theta0;          ///< j_{d/2} / (kR), forward-peak width
    double delta_theta;     ///< pi / (kR), fluctuation period
    double delta_theta_bs;  ///< 1 / (k l), backscattering width
};

AngularScales angular_scales(int d, double k, double radius, double mean_free_path);

struct OneDAmplitudes {
    std::complex<double> t_plus;
    std::complex<double> t_minus;
    std::complex<double> a_t;  ///< 1 + T+ / (2ik)
    std::complex<double> a_r;  ///< T- / (2ik)
    double sigma;              ///< |A_T - 1|^2 + |A_R|^2
    double sigma_alt;          ///< 2 (1 - Re A_T)
    bool conserving;           ///< |A_T|^2 + |A_R|^2 = 1 and the two sigmas agree
};

OneDAmplitudes one_d_observables(std::complex<double> t_plus, std::complex<double> t_minus, double k,
                                 double tol = 1e-12);

/// Same, starting from (A_T, A_R).
OneDAmplitudes one_d_from_coefficients(std::complex<double> a_t, std::complex<double> a_r, double k,
                                       double tol = 1e-12);

} // namespace lorentz
