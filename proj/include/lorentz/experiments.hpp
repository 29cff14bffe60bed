#pragma once

// Monte Carlo experiment driver. Configuration i uses seed spec.seed + i and
// is an independent work item; workers pull indices from a shared counter,
// results are folded into the statistics in index order, so the output does
// not depend on the thread count.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "lorentz/csv.hpp"
#include "lorentz/experiment_spec.hpp"
#include "lorentz/foldylax.hpp"
#include "lorentz/stats.hpp"

namespace lorentz {

extern const char* const code_version;

struct RunOptions {
    int threads = 0;            ///< 0: hardware concurrency
    bool keep_samples = false;  ///< store every per-config row (memory: configs x points)
};

/// Header block shared by every CSV: d, N, alpha, model, k, seed, rng,
/// code_version, R, configs, kind, incident and the grid description.
Metadata experiment_metadata(const ExperimentSpec& spec);

struct CurveResult {
    std::string x_name;     ///< "theta_deg" or "k"
    Eigen::VectorXd x;
    CurveStats stats;
    Eigen::MatrixXd samples;  ///< only with keep_samples
    Metadata meta;

    CsvDocument to_csv() const;
};

/// dsigma/dOmega on the angle grid, averaged over configurations.
CurveResult run_diff_xs(const ExperimentSpec& spec, const RunOptions& opt = {});

/// sigma(k) by the optical theorem; every quadform_every-th configuration is
/// also evaluated as a^dagger I a / k and the worst relative gap is recorded
/// under "quadform_max_rel_dev".
CurveResult run_total_xs_sweep(const ExperimentSpec& spec, const RunOptions& opt = {});

struct PointXsResult {
    Eigen::VectorXd k;
    Eigen::VectorXd hard_sphere;
    Eigen::VectorXd delta_like;
    Eigen::VectorXd bound;  ///< 1 / (k I(k,0))
    Metadata meta;

    CsvDocument to_csv() const;
};

PointXsResult run_point_xs_sweep(const ExperimentSpec& spec);

struct ConfigDiagnostics {
    std::uint64_t seed = 0;
    ConservationReport report;
    bool pass = false;
};

struct DiagnosticResult {
    std::vector<ConfigDiagnostics> configs;
    std::vector<Eigen::VectorXcd> m_spectra;  ///< run_spectrum only, sorted by Im
    std::vector<Eigen::VectorXd> s_moduli;    ///< run_spectrum only, |lambda_S| ascending
    bool all_pass = true;
    Metadata meta;

    CsvDocument to_csv() const;
};

/// Conservation diagnostics per configuration at the spec's single k.
DiagnosticResult run_smatrix_check(const ExperimentSpec& spec, const RunOptions& opt = {});
/// The same, also keeping the eigenvalues of M and the moduli |lambda_S|.
DiagnosticResult run_spectrum(const ExperimentSpec& spec, const RunOptions& opt = {});

} // namespace lorentz
