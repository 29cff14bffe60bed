#pragma once

// s-wave point scatterer: phase shift, amplitude F(k), S-matrix element and
// the point cross section. Also the zero-energy scattering length of a
// short-range radial potential.

#include <complex>
#include <string_view>
#include <variant>
#include <vector>

namespace lorentz {

enum class ScatteringKind { HardSphere, DeltaLike };

std::string_view to_string(ScatteringKind kind);
/// Accepts "hard-sphere" and "delta-like"; throws ValidationError otherwise.
ScatteringKind parse_scattering_kind(std::string_view text);

struct ScattererModel {
    ScatteringKind kind = ScatteringKind::HardSphere;
    double alpha = 1e-3;  ///< scattering length, > 0

    bool operator==(const ScattererModel&) const = default;
};

/// Phase shift stored as a normalized pair with cot(delta) = cos_part / sin_part.
/// The pair is kept instead of cot(delta) itself so that sin(delta) = 0 is
/// representable.
struct PhaseShift {
    double sin_part;
    double cos_part;
};

/// Throws DomainError for alpha <= 0, k <= 0 or d < 1.
PhaseShift phase_shift(const ScattererModel& model, int d, double k);

/// cot(delta); PoleError where sin(delta) = 0 (hard sphere at alpha k = j_{(d-2)/2}).
double phase_shift_cot(const ScattererModel& model, int d, double k);

/// F(k) = 1 / (I(k,0) (i - cot delta)), continued to 0 at the cot pole.
std::complex<double> amplitude(const ScattererModel& model, int d, double k);

/// 1/F(k). Throws TransparentScattererError where F = 0.
std::complex<double> inverse_amplitude(const ScattererModel& model, int d, double k);

/// The same two maps from an explicit phase shift.
std::complex<double> amplitude(const PhaseShift& ps, int d, double k);
std::complex<double> inverse_amplitude(const PhaseShift& ps, int d, double k);

/// S(k) = 1 - 2i I(k,0) F(k) = e^{2 i delta}.
std::complex<double> s_matrix_element(const ScattererModel& model, int d, double k);

/// sigma_pt = I(k,0) |F|^2 / k = sin^2(delta) / (k I(k,0)).
double point_cross_section(const ScattererModel& model, int d, double k);

/// Universal bound 1 / (k I(k,0)), attained when sin^2(delta) = 1.
double point_cross_section_bound(int d, double k);

/// Isotropic differential cross section sigma_pt / S_d.
double diff_cross_section_point(const ScattererModel& model, int d, double k);

/// True when alpha k > 0.1, outside the nominal low-energy validity.
bool outside_low_energy_regime(const ScattererModel& model, double k);

// Radial potentials for the scattering length. The zero-energy equation is
// psi'' + (d-1)/r psi' = u(r) psi inside r < b and u = 0 outside.

/// u = -w^2 on r < b.
struct SquareWell {
    double w;
    double b;
};

/// u = +w^2 on r < b (imaginary well depth).
struct Barrier {
    double w;
    double b;
};

/// u sampled on a uniform grid r_j = j b / (n - 1), n >= 2, linear in between.
struct Tabulated {
    std::vector<double> u;
    double b;
};

using RadialPotential = std::variant<SquareWell, Barrier, Tabulated>;

/// psi(b) / psi'(b) of the regular zero-energy solution.
double log_derivative_inverse(const RadialPotential& pot, int d);

/// alpha from psi/psi' at r = b:
///   d != 2: alpha = b (1 + (d-2) psi / (b psi'))^{-1/(d-2)}
///   d == 2: alpha = b exp(-psi / (b psi'))
/// Throws ModelError if psi'(b) = 0 or the d != 2 base is not positive.
double scattering_length(const RadialPotential& pot, int d);

/// Same formula from a precomputed psi/psi'.
double scattering_length_from_ratio(double psi_over_dpsi, double b, int d);

} // namespace lorentz
