#pragma once

// Foldy-Lax multiple scattering on N point scatterers:
//
//   M a = phi,   M_ii = 1/F(k),   M_ij = -G+(k, r_ij),   phi_i = exp(i k Omega0 . x_i)
//
// M is complex symmetric (not Hermitian); Im M is the matrix I_ij = I(k, r_ij).

#include <complex>

#include <Eigen/Core>

#include "lorentz/medium.hpp"
#include "lorentz/pointscatter.hpp"

namespace lorentz {

struct MSMatrix {
    Eigen::MatrixXcd m;
    Eigen::MatrixXd positions;  ///< copy of the configuration, N x d
    double k = 1.0;
    ScattererModel model;
    std::complex<double> inverse_amplitude;

    int dim() const { return static_cast<int>(positions.cols()); }
    Eigen::Index size() const { return m.rows(); }
};

/// O(N^2) assembly. TransparentScattererError where F(k) = 0.
MSMatrix build_matrix(const Configuration& cfg, const ScattererModel& model, double k);

/// I_ij = I(k, r_ij) from green_imag_reg, independent of build_matrix.
Eigen::MatrixXd build_imatrix(const Eigen::MatrixXd& positions, double k);

/// Unit vector along coordinate axis `axis` in d dimensions.
Eigen::VectorXd axis_direction(int d, int axis = 0);

/// cos(theta) e1 + sin(theta) e2 for d >= 2; for d = 1 only theta in {0, pi}.
Eigen::VectorXd scattering_direction(int d, double theta);

/// phi_i = exp(i k Omega . x_i).
Eigen::VectorXcd plane_wave(const Eigen::MatrixXd& positions, double k, const Eigen::VectorXd& omega);

struct ScatteringSolution {
    Eigen::VectorXcd a;
    Eigen::VectorXcd phi;
    Eigen::VectorXd incident;
    Eigen::MatrixXd positions;
    double k = 1.0;
    double residual = 0.0;  ///< ||M a - phi|| / ||phi||

    int dim() const { return static_cast<int>(positions.cols()); }
};

inline constexpr double solve_residual_tolerance = 1e-10;

/// Dense LU with partial pivoting. SolverError if the relative residual
/// exceeds solve_residual_tolerance or the result is not finite.
ScatteringSolution solve(const MSMatrix& ms, const Eigen::VectorXd& incident);

/// First-order (Born) amplitudes a = F phi; no matrix solve.
ScatteringSolution born_solution(const Configuration& cfg, const ScattererModel& model, double k,
                                 const Eigen::VectorXd& incident);

/// T(k, Omega) = sum_i a_i exp(-i k Omega . x_i).
std::complex<double> scattering_amplitude(const ScatteringSolution& sol, const Eigen::VectorXd& omega);

/// dsigma/dOmega = I(k,0) / (k S_d) |T|^2.
double diff_cross_section(const ScatteringSolution& sol, const Eigen::VectorXd& omega);

/// dsigma/dOmega at each angle of a grid, directions from scattering_direction.
Eigen::VectorXd diff_cross_section_curve(const ScatteringSolution& sol, const Eigen::VectorXd& theta);

/// sigma = a^dagger I a / k.
double total_cross_section_quadform(const ScatteringSolution& sol);
double total_cross_section_quadform(const ScatteringSolution& sol, const Eigen::MatrixXd& imatrix);

/// sigma = -Im(phi^dagger a) / k.
double total_cross_section_optical(const ScatteringSolution& sol);

/// Angular integral of dsigma/dOmega reduced pair by pair to
/// S_{d-1} int_0^pi cos(k r_ij cos t) sin^{d-2}(t) dt with Gauss-Legendre;
/// nodes default to 4 ceil(k R) + 64 with R the largest |x_i|.
double total_cross_section_quadrature(const ScatteringSolution& sol, int nodes = 0);

/// Eigenvalues of M (general complex eigensolver).
Eigen::VectorXcd m_eigenvalues(const Eigen::MatrixXcd& m);
Eigen::VectorXcd m_eigenvalues(const MSMatrix& ms);

/// S = M^dagger M^{-1}.
Eigen::MatrixXcd s_matrix(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd s_matrix(const MSMatrix& ms);

/// Eigenvalues of S from a general eigensolver on s_matrix.
Eigen::VectorXcd s_eigenvalues(const Eigen::MatrixXcd& m);

/// Eigenvalues of S as (h - i)/(h + i), h the spectrum of L^{-1} Re(M) L^{-T}
/// with I = L L^T. SolverError if the Cholesky factorization fails.
Eigen::VectorXcd s_spectrum_via_cholesky(const Eigen::MatrixXcd& m, const Eigen::MatrixXd& imatrix);
Eigen::VectorXcd s_spectrum_via_cholesky(const MSMatrix& ms);

bool cholesky_succeeds(const Eigen::MatrixXd& imatrix);

struct ConservationReport {
    double min_imag_eigenvalue = 0.0;       ///< min Im mu, scaled by nothing
    double max_unit_circle_deviation = 0.0; ///< max | |lambda_S| - 1 |
    bool cholesky_ok = false;
    double optical_residual = 0.0;          ///< |sigma_quadform - sigma_optical| / sigma
    double sigma_optical = 0.0;
    double sigma_quadform = 0.0;
};

struct ConservationTolerances {
    double optical = 1e-10;
    double unit_circle = 1e-8;
};

/// All conservation diagnostics for a (possibly corrupted) matrix m of the
/// system described by positions and k. I is rebuilt from green_imag_reg.
ConservationReport conservation_diagnostics(const Eigen::MatrixXcd& m, const Eigen::MatrixXd& positions,
                                            double k, const Eigen::VectorXd& incident);
ConservationReport conservation_diagnostics(const MSMatrix& ms, const Eigen::VectorXd& incident);

/// The optical residual with the solve and both cross sections carried in
/// long double, for the same (double) matrix m.
double optical_residual_extended(const Eigen::MatrixXcd& m, const Eigen::MatrixXd& positions, double k,
                                 const Eigen::VectorXd& incident);

bool passes(const ConservationReport& report, const ConservationTolerances& tol = {});

} // namespace lorentz
