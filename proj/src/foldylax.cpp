#include "lorentz/foldylax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "lorentz/errors.hpp"
#include "lorentz/greens.hpp"
#include "lorentz/quadrature.hpp"
#include "lorentz/specialfn.hpp"

namespace lorentz {

namespace {

using cplx = std::complex<double>;
constexpr cplx I1(0.0, 1.0);

// a = M^{-1} phi with up to two steps of iterative refinement.
Eigen::VectorXcd lu_solve(const Eigen::MatrixXcd& m, const Eigen::VectorXcd& phi, double& residual) {
    const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
    Eigen::VectorXcd a = lu.solve(phi);
    const double scale = phi.norm();
    Eigen::VectorXcd r = phi - m * a;
    residual = r.norm() / scale;
    for (int step = 0; step < 2 && residual > solve_residual_tolerance; ++step) {
        a += lu.solve(r);
        r = phi - m * a;
        residual = r.norm() / scale;
    }
    if (!a.allFinite() || !std::isfinite(residual)) {
        throw SolverError("Foldy-Lax solve produced non-finite amplitudes (singular M)");
    }
    if (residual > solve_residual_tolerance) {
        throw SolverError("Foldy-Lax solve residual " + std::to_string(residual) + " above tolerance");
    }
    return a;
}

double max_radius(const Eigen::MatrixXd& positions) { return positions.rowwise().norm().maxCoeff(); }

} // namespace

MSMatrix build_matrix(const Configuration& cfg, const ScattererModel& model, double k) {
    const int d = cfg.spec.d;
    const GreensContext ctx(d, k);
    const Eigen::Index n = cfg.positions.rows();
    MSMatrix ms;
    ms.positions = cfg.positions;
    ms.k = k;
    ms.model = model;
    ms.inverse_amplitude = inverse_amplitude(model, d, k);
    ms.m.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        ms.m(j, j) = ms.inverse_amplitude;
        for (Eigen::Index i = j + 1; i < n; ++i) {
            const double r = (cfg.positions.row(i) - cfg.positions.row(j)).norm();
            const cplx g = -green_plus(ctx, r);
            ms.m(i, j) = g;
            ms.m(j, i) = g;
        }
    }
    return ms;
}

Eigen::MatrixXd build_imatrix(const Eigen::MatrixXd& positions, double k) {
    const GreensContext ctx(static_cast<int>(positions.cols()), k);
    const Eigen::Index n = positions.rows();
    Eigen::MatrixXd im(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        im(j, j) = ctx.imag_at_origin();
        for (Eigen::Index i = j + 1; i < n; ++i) {
            const double v = green_imag_reg(ctx, (positions.row(i) - positions.row(j)).norm());
            im(i, j) = v;
            im(j, i) = v;
        }
    }
    return im;
}

Eigen::VectorXd axis_direction(int d, int axis) {
    if (axis < 0 || axis >= d) {
        throw ValidationError("axis_direction: axis out of range");
    }
    Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
    e[axis] = 1.0;
    return e;
}

Eigen::VectorXd scattering_direction(int d, double theta) {
    if (d == 1) {
        if (std::abs(theta) < 1e-12) {
            return axis_direction(1);
        }
        if (std::abs(theta - std::numbers::pi) < 1e-12) {
            return -axis_direction(1);
        }
        throw ValidationError("d = 1 only has the directions theta = 0 and theta = pi");
    }
    Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
    e[0] = std::cos(theta);
    e[1] = std::sin(theta);
    return e;
}

Eigen::VectorXcd plane_wave(const Eigen::MatrixXd& positions, double k, const Eigen::VectorXd& omega) {
    if (omega.size() != positions.cols()) {
        throw ValidationError("plane_wave: direction has the wrong dimension");
    }
    const Eigen::VectorXd phase = k * (positions * omega);
    Eigen::VectorXcd phi(phase.size());
    for (Eigen::Index i = 0; i < phase.size(); ++i) {
        phi[i] = std::polar(1.0, phase[i]);
    }
    return phi;
}

ScatteringSolution solve(const MSMatrix& ms, const Eigen::VectorXd& incident) {
    ScatteringSolution sol;
    sol.phi = plane_wave(ms.positions, ms.k, incident);
    sol.a = lu_solve(ms.m, sol.phi, sol.residual);
    sol.incident = incident;
    sol.positions = ms.positions;
    sol.k = ms.k;
    return sol;
}

ScatteringSolution born_solution(const Configuration& cfg, const ScattererModel& model, double k,
                                 const Eigen::VectorXd& incident) {
    ScatteringSolution sol;
    sol.phi = plane_wave(cfg.positions, k, incident);
    sol.a = amplitude(model, cfg.spec.d, k) * sol.phi;
    sol.incident = incident;
    sol.positions = cfg.positions;
    sol.k = k;
    return sol;
}

cplx scattering_amplitude(const ScatteringSolution& sol, const Eigen::VectorXd& omega) {
    return plane_wave(sol.positions, sol.k, omega).dot(sol.a);
}

double diff_cross_section(const ScatteringSolution& sol, const Eigen::VectorXd& omega) {
    const int d = sol.dim();
    const double i0 = green_imag_at_origin(d, sol.k);
    return i0 / (sol.k * special::sphere_surface(d)) * std::norm(scattering_amplitude(sol, omega));
}

Eigen::VectorXd diff_cross_section_curve(const ScatteringSolution& sol, const Eigen::VectorXd& theta) {
    Eigen::VectorXd out(theta.size());
    for (Eigen::Index t = 0; t < theta.size(); ++t) {
        out[t] = diff_cross_section(sol, scattering_direction(sol.dim(), theta[t]));
    }
    return out;
}

double total_cross_section_quadform(const ScatteringSolution& sol, const Eigen::MatrixXd& imatrix) {
    const Eigen::VectorXcd ia = imatrix * sol.a.real() + I1 * (imatrix * sol.a.imag());
    return sol.a.dot(ia).real() / sol.k;
}

double total_cross_section_quadform(const ScatteringSolution& sol) {
    return total_cross_section_quadform(sol, build_imatrix(sol.positions, sol.k));
}

double total_cross_section_optical(const ScatteringSolution& sol) { return -sol.phi.dot(sol.a).imag() / sol.k; }

double total_cross_section_quadrature(const ScatteringSolution& sol, int nodes) {
    const int d = sol.dim();
    const double k = sol.k;
    const double i0 = green_imag_at_origin(d, k);
    const double sd = special::sphere_surface(d);
    if (d == 1) {
        const double forward = std::norm(scattering_amplitude(sol, axis_direction(1)));
        const double backward = std::norm(scattering_amplitude(sol, -axis_direction(1)));
        return i0 / (k * sd) * (forward + backward);
    }
    if (nodes <= 0) {
        nodes = 4 * static_cast<int>(std::ceil(k * max_radius(sol.positions))) + 64;
    }
    const QuadratureRule rule = zonal_sphere_rule(d, nodes);
    const Eigen::VectorXd cos_t = rule.nodes.array().cos();
    const Eigen::Index n = sol.a.size();
    double sum = rule.weights.sum() * sol.a.squaredNorm();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double kr = k * (sol.positions.row(i) - sol.positions.row(j)).norm();
            const double g = (rule.weights.array() * (kr * cos_t.array()).cos()).sum();
            sum += 2.0 * (std::conj(sol.a[i]) * sol.a[j]).real() * g;
        }
    }
    return i0 / (k * sd) * sum;
}

Eigen::VectorXcd m_eigenvalues(const Eigen::MatrixXcd& m) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    if (es.info() != Eigen::Success) {
        throw SolverError("eigensolver did not converge");
    }
    return es.eigenvalues();
}

Eigen::VectorXcd m_eigenvalues(const MSMatrix& ms) { return m_eigenvalues(ms.m); }

Eigen::MatrixXcd s_matrix(const Eigen::MatrixXcd& m) {
    // S^T = M^{-T} conj(M), so one LU of M^T gives S without forming M^{-1}.
    const Eigen::MatrixXcd mt = m.transpose();
    const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(mt);
    const Eigen::MatrixXcd st = lu.solve(m.conjugate());
    if (!st.allFinite()) {
        throw SolverError("s_matrix: M is singular");
    }
    return st.transpose();
}

Eigen::MatrixXcd s_matrix(const MSMatrix& ms) { return s_matrix(ms.m); }

Eigen::VectorXcd s_eigenvalues(const Eigen::MatrixXcd& m) { return m_eigenvalues(s_matrix(m)); }

bool cholesky_succeeds(const Eigen::MatrixXd& imatrix) {
    const Eigen::LLT<Eigen::MatrixXd> llt(imatrix);
    return llt.info() == Eigen::Success;
}

Eigen::VectorXcd s_spectrum_via_cholesky(const Eigen::MatrixXcd& m, const Eigen::MatrixXd& imatrix) {
    const Eigen::LLT<Eigen::MatrixXd> llt(imatrix);
    if (llt.info() != Eigen::Success) {
        throw SolverError("Cholesky factorization of I failed (not positive definite)");
    }
    const auto l = llt.matrixL();
    const Eigen::MatrixXd a = l.solve(Eigen::MatrixXd(m.real()));  // L^{-1} R
    Eigen::MatrixXd h = l.solve(a.transpose()).transpose();          // L^{-1} R L^{-T}
    h = 0.5 * (h + h.transpose()).eval();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw SolverError("symmetric eigensolver did not converge");
    }
    Eigen::VectorXcd lambda(h.rows());
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        const double x = es.eigenvalues()[i];
        lambda[i] = (x - I1) / (x + I1);
    }
    return lambda;
}

Eigen::VectorXcd s_spectrum_via_cholesky(const MSMatrix& ms) {
    return s_spectrum_via_cholesky(ms.m, Eigen::MatrixXd(ms.m.imag()));
}

ConservationReport conservation_diagnostics(const Eigen::MatrixXcd& m, const Eigen::MatrixXd& positions,
                                            double k, const Eigen::VectorXd& incident) {
    ConservationReport rep;
    const Eigen::MatrixXd im = build_imatrix(positions, k);
    rep.cholesky_ok = cholesky_succeeds(im);
    rep.min_imag_eigenvalue = m_eigenvalues(m).imag().minCoeff();
    const Eigen::VectorXcd lambda = s_eigenvalues(m);
    rep.max_unit_circle_deviation = (lambda.cwiseAbs().array() - 1.0).abs().maxCoeff();

    ScatteringSolution sol;
    sol.phi = plane_wave(positions, k, incident);
    const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
    sol.a = lu.solve(sol.phi);
    sol.residual = (sol.phi - m * sol.a).norm() / sol.phi.norm();
    sol.incident = incident;
    sol.positions = positions;
    sol.k = k;
    rep.sigma_optical = total_cross_section_optical(sol);
    rep.sigma_quadform = total_cross_section_quadform(sol, im);
    rep.optical_residual = std::abs(rep.sigma_quadform - rep.sigma_optical) /
                           std::max(std::abs(rep.sigma_quadform), std::numeric_limits<double>::min());
    if (!std::isfinite(rep.optical_residual)) {
        rep.optical_residual = std::numeric_limits<double>::infinity();
    }
    return rep;
}

double optical_residual_extended(const Eigen::MatrixXcd& m, const Eigen::MatrixXd& positions, double k,
                                 const Eigen::VectorXd& incident) {
    using cl = std::complex<long double>;
    using MatL = Eigen::Matrix<cl, Eigen::Dynamic, Eigen::Dynamic>;
    using VecL = Eigen::Matrix<cl, Eigen::Dynamic, 1>;
    const Eigen::MatrixXd im = build_imatrix(positions, k);
    const MatL ml = m.cast<cl>();
    const VecL phi = plane_wave(positions, k, incident).cast<cl>();
    const Eigen::PartialPivLU<MatL> lu(ml);
    VecL a = lu.solve(phi);
    a += lu.solve(phi - ml * a);
    const long double optical = -phi.dot(a).imag() / k;
    const long double quad = (a.adjoint() * im.cast<cl>() * a)(0, 0).real() / k;
    return static_cast<double>(std::abs(quad - optical) / std::abs(quad));
}

ConservationReport conservation_diagnostics(const MSMatrix& ms, const Eigen::VectorXd& incident) {
    return conservation_diagnostics(ms.m, ms.positions, ms.k, incident);
}

bool passes(const ConservationReport& report, const ConservationTolerances& tol) {
    return report.cholesky_ok && report.min_imag_eigenvalue > 0.0 &&
           report.max_unit_circle_deviation <= tol.unit_circle && report.optical_residual <= tol.optical;
}

} // namespace lorentz
