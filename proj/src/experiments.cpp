#include "lorentz/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "lorentz/errors.hpp"
#include "lorentz/greens.hpp"
#include "lorentz/medium.hpp"
#include "lorentz/pointscatter.hpp"
#include "lorentz/specialfn.hpp"

namespace lorentz {

const char* const code_version = LORENTZ_VERSION;

namespace {

using cplx = std::complex<double>;
constexpr std::int64_t chunk_size = 1024;

template <class E>
[[noreturn]] void rethrow_as(const E&, const std::string& msg) {
    throw E(msg);
}

// Rethrow the stored exception with the configuration seed in the message,
// keeping the error class so callers can still map it to an exit code.
[[noreturn]] void rethrow_with_seed(std::exception_ptr ep, std::uint64_t seed) {
    const std::string prefix = "configuration seed " + std::to_string(seed) + ": ";
    try {
        std::rethrow_exception(ep);
    } catch (const ValidationError& e) {
        rethrow_as(e, prefix + e.what());
    } catch (const TransparentScattererError& e) {
        rethrow_as(e, prefix + e.what());
    } catch (const PoleError& e) {
        rethrow_as(e, prefix + e.what());
    } catch (const DomainError& e) {
        rethrow_as(e, prefix + e.what());
    } catch (const ModelError& e) {
        rethrow_as(e, prefix + e.what());
    } catch (const std::exception& e) {
        throw SolverError(prefix + e.what());
    }
}

int worker_count(int requested, std::int64_t items) {
    int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    n = std::max(n, 1);
    return static_cast<int>(std::min<std::int64_t>(n, items));
}

// Run body(i) for i in [begin, end) on a small pool. The failure with the
// lowest index wins, so the reported seed is deterministic.
template <class Body>
void parallel_range(std::int64_t begin, std::int64_t end, int threads, std::uint64_t base_seed, Body&& body) {
    std::atomic<std::int64_t> next{begin};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    std::int64_t failed_at = end;
    auto worker = [&] {
        for (;;) {
            const std::int64_t i = next.fetch_add(1);
            if (i >= end) {
                return;
            }
            try {
                body(i);
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (i < failed_at) {
                    failed_at = i;
                    failure = std::current_exception();
                }
            }
        }
    };
    const int n = worker_count(threads, end - begin);
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(n));
        for (int t = 0; t < n; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        rethrow_with_seed(failure, base_seed + static_cast<std::uint64_t>(failed_at));
    }
}

Eigen::VectorXd direction(int d, int axis, double theta) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
    if (d == 1) {
        e[0] = std::cos(theta) > 0.0 ? 1.0 : -1.0;
        return e;
    }
    e[axis] = std::cos(theta);
    e[(axis + 1) % d] = std::sin(theta);
    return e;
}

Configuration draw(const ExperimentSpec& spec, std::int64_t index) {
    return sample_configuration({spec.d, spec.n}, spec.seed + static_cast<std::uint64_t>(index),
                                spec.min_separation);
}

Eigen::VectorXd to_vector(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

// Fold per-config rows produced chunk by chunk in index order.
template <class RowFn>
CurveAccumulator accumulate(const ExperimentSpec& spec, const RunOptions& opt, Eigen::Index points,
                            Eigen::MatrixXd* keep, RowFn&& row_of) {
    CurveAccumulator acc(points);
    if (keep) {
        keep->resize(spec.configs, points);
    }
    std::vector<Eigen::VectorXd> rows;
    for (std::int64_t start = 0; start < spec.configs; start += chunk_size) {
        const std::int64_t stop = std::min(spec.configs, start + chunk_size);
        rows.assign(static_cast<std::size_t>(stop - start), Eigen::VectorXd());
        parallel_range(start, stop, opt.threads, spec.seed,
                       [&](std::int64_t i) { rows[static_cast<std::size_t>(i - start)] = row_of(i); });
        for (std::int64_t i = start; i < stop; ++i) {
            const auto& r = rows[static_cast<std::size_t>(i - start)];
            acc.add(r);
            if (keep) {
                keep->row(i) = r.transpose();
            }
        }
    }
    return acc;
}

void append(Metadata& meta, std::string key, std::string value) { meta.emplace_back(std::move(key), std::move(value)); }

} // namespace

Metadata experiment_metadata(const ExperimentSpec& spec) {
    Metadata m;
    append(m, "kind", std::string(to_string(spec.kind)));
    append(m, "d", format_number(spec.d));
    append(m, "N", format_number(spec.n));
    append(m, "alpha", format_number(spec.model.alpha));
    append(m, "model", std::string(to_string(spec.model.kind)));
    if (spec.grid) {
        append(m, "k", "logspace");
        append(m, "k_min", format_number(spec.grid->lo));
        append(m, "k_max", format_number(spec.grid->hi));
        append(m, "k_points", format_number(spec.grid->points));
    } else {
        append(m, "k", format_number(spec.k));
        append(m, "sigma_pt", format_number(point_cross_section(spec.model, spec.d, spec.k)));
    }
    append(m, "seed", format_number(spec.seed));
    append(m, "rng", std::string(Xoshiro256StarStar::name));
    append(m, "code_version", code_version);
    append(m, "R", format_number(gas_radius(spec.d, spec.n)));
    append(m, "configs", format_number(static_cast<std::uint64_t>(spec.configs)));
    append(m, "incident", "axis" + std::to_string(spec.incident_axis));
    append(m, "min_separation", format_number(spec.min_separation));
    if (spec.kind == ExperimentKind::DiffXs) {
        append(m, "theta_points", format_number(spec.theta_points));
        append(m, "theta_min_deg", format_number(spec.theta_min_deg));
        append(m, "theta_max_deg", format_number(spec.theta_max_deg));
    }
    return m;
}

CsvDocument CurveResult::to_csv() const {
    CsvDocument doc;
    doc.meta = meta;
    doc.columns = {x_name, "mean", "q1", "median", "q3", "sem"};
    doc.rows.resize(x.size(), 6);
    doc.rows.col(0) = x;
    doc.rows.col(1) = stats.mean;
    doc.rows.col(2) = stats.q1;
    doc.rows.col(3) = stats.median;
    doc.rows.col(4) = stats.q3;
    doc.rows.col(5) = stats.sem;
    return doc;
}

CurveResult run_diff_xs(const ExperimentSpec& spec, const RunOptions& opt) {
    validate(spec);
    const std::vector<double> theta = spec.theta_values();
    const auto t = static_cast<Eigen::Index>(theta.size());
    Eigen::MatrixXd omega(t, spec.d);
    for (Eigen::Index j = 0; j < t; ++j) {
        omega.row(j) = direction(spec.d, spec.incident_axis, theta[static_cast<std::size_t>(j)]).transpose();
    }
    const Eigen::VectorXd incident = axis_direction(spec.d, spec.incident_axis);
    const double k = spec.k;
    const double scale = green_imag_at_origin(spec.d, k) / (k * special::sphere_surface(spec.d));

    CurveResult out;
    out.x_name = "theta_deg";
    out.x = to_vector(theta) * (180.0 / std::numbers::pi);
    auto row = [&](std::int64_t i) -> Eigen::VectorXd {
        const Configuration cfg = draw(spec, i);
        const ScatteringSolution sol = solve(build_matrix(cfg, spec.model, k), incident);
        const Eigen::MatrixXd phase = -k * (omega * cfg.positions.transpose());  // t x N
        Eigen::VectorXd v(t);
        for (Eigen::Index j = 0; j < t; ++j) {
            cplx amp = 0.0;
            for (Eigen::Index n = 0; n < sol.a.size(); ++n) {
                amp += std::polar(1.0, phase(j, n)) * sol.a[n];
            }
            v[j] = scale * std::norm(amp);
        }
        return v;
    };
    const CurveAccumulator acc = accumulate(spec, opt, t, opt.keep_samples ? &out.samples : nullptr, row);
    out.stats = acc.finish();
    out.meta = experiment_metadata(spec);
    append(out.meta, "quantiles", out.stats.exact_quantiles ? "exact" : "reservoir");
    return out;
}

CurveResult run_total_xs_sweep(const ExperimentSpec& spec, const RunOptions& opt) {
    validate(spec);
    const std::vector<double> ks = spec.k_values();
    const auto nk = static_cast<Eigen::Index>(ks.size());
    const Eigen::VectorXd incident = axis_direction(spec.d, spec.incident_axis);
    std::vector<double> spot(static_cast<std::size_t>(spec.configs), 0.0);

    CurveResult out;
    out.x_name = "k";
    out.x = to_vector(ks);
    auto row = [&](std::int64_t i) -> Eigen::VectorXd {
        const Configuration cfg = draw(spec, i);
        const bool check = i % spec.quadform_every == 0;
        Eigen::VectorXd v(nk);
        double worst = 0.0;
        for (Eigen::Index j = 0; j < nk; ++j) {
            const double k = ks[static_cast<std::size_t>(j)];
            const ScatteringSolution sol = solve(build_matrix(cfg, spec.model, k), incident);
            v[j] = total_cross_section_optical(sol);
            if (check) {
                const double q = total_cross_section_quadform(sol);
                worst = std::max(worst, std::abs(q - v[j]) / std::abs(q));
            }
        }
        spot[static_cast<std::size_t>(i)] = worst;
        return v;
    };
    const CurveAccumulator acc = accumulate(spec, opt, nk, opt.keep_samples ? &out.samples : nullptr, row);
    out.stats = acc.finish();
    out.meta = experiment_metadata(spec);
    append(out.meta, "quantiles", out.stats.exact_quantiles ? "exact" : "reservoir");
    append(out.meta, "quadform_every", format_number(spec.quadform_every));
    append(out.meta, "quadform_max_rel_dev", format_number(*std::max_element(spot.begin(), spot.end())));
    return out;
}

CsvDocument PointXsResult::to_csv() const {
    CsvDocument doc;
    doc.meta = meta;
    doc.columns = {"k", "hard_sphere", "delta_like", "bound"};
    doc.rows.resize(k.size(), 4);
    doc.rows << k, hard_sphere, delta_like, bound;
    return doc;
}

PointXsResult run_point_xs_sweep(const ExperimentSpec& spec) {
    validate(spec);
    const std::vector<double> ks = spec.k_values();
    const auto nk = static_cast<Eigen::Index>(ks.size());
    PointXsResult out;
    out.k = to_vector(ks);
    out.hard_sphere.resize(nk);
    out.delta_like.resize(nk);
    out.bound.resize(nk);
    const ScattererModel hard{ScatteringKind::HardSphere, spec.model.alpha};
    const ScattererModel delta{ScatteringKind::DeltaLike, spec.model.alpha};
    for (Eigen::Index j = 0; j < nk; ++j) {
        const double k = ks[static_cast<std::size_t>(j)];
        out.hard_sphere[j] = point_cross_section(hard, spec.d, k);
        out.delta_like[j] = point_cross_section(delta, spec.d, k);
        out.bound[j] = point_cross_section_bound(spec.d, k);
    }
    out.meta = experiment_metadata(spec);
    return out;
}

namespace {

DiagnosticResult run_diagnostics(const ExperimentSpec& spec, const RunOptions& opt, bool keep_spectra) {
    validate(spec);
    const Eigen::VectorXd incident = axis_direction(spec.d, spec.incident_axis);
    const ConservationTolerances tol{spec.optical_tol, spec.unit_circle_tol};
    const auto n = static_cast<std::size_t>(spec.configs);
    DiagnosticResult out;
    out.configs.resize(n);
    if (keep_spectra) {
        out.m_spectra.resize(n);
        out.s_moduli.resize(n);
    }
    parallel_range(0, spec.configs, opt.threads, spec.seed, [&](std::int64_t i) {
        const auto idx = static_cast<std::size_t>(i);
        const MSMatrix ms = build_matrix(draw(spec, i), spec.model, spec.k);
        ConfigDiagnostics& c = out.configs[idx];
        c.seed = spec.seed + static_cast<std::uint64_t>(i);
        c.report = conservation_diagnostics(ms, incident);
        c.pass = passes(c.report, tol);
        if (keep_spectra) {
            Eigen::VectorXcd mu = m_eigenvalues(ms);
            std::sort(mu.begin(), mu.end(), [](cplx a, cplx b) { return a.imag() < b.imag(); });
            out.m_spectra[idx] = mu;
            Eigen::VectorXd mod = s_eigenvalues(ms.m).cwiseAbs();
            std::sort(mod.begin(), mod.end());
            out.s_moduli[idx] = mod;
        }
    });
    for (const auto& c : out.configs) {
        out.all_pass = out.all_pass && c.pass;
    }
    out.meta = experiment_metadata(spec);
    append(out.meta, "optical_tol", format_number(spec.optical_tol));
    append(out.meta, "unit_circle_tol", format_number(spec.unit_circle_tol));
    append(out.meta, "result", out.all_pass ? "PASS" : "FAIL");
    return out;
}

} // namespace

CsvDocument DiagnosticResult::to_csv() const {
    CsvDocument doc;
    doc.meta = meta;
    if (!m_spectra.empty()) {
        doc.columns = {"seed", "index", "re_mu", "im_mu", "abs_lambda_s"};
        Eigen::Index total = 0;
        for (const auto& s : m_spectra) {
            total += s.size();
        }
        doc.rows.resize(total, 5);
        Eigen::Index r = 0;
        for (std::size_t c = 0; c < m_spectra.size(); ++c) {
            for (Eigen::Index i = 0; i < m_spectra[c].size(); ++i, ++r) {
                doc.rows.row(r) << static_cast<double>(configs[c].seed), static_cast<double>(i),
                    m_spectra[c][i].real(), m_spectra[c][i].imag(), s_moduli[c][i];
            }
        }
        return doc;
    }
    doc.columns = {"seed",           "min_im_mu",     "max_unit_circle_dev", "cholesky_ok",
                   "optical_residual", "sigma_optical", "sigma_quadform",      "pass"};
    doc.rows.resize(static_cast<Eigen::Index>(configs.size()), 8);
    for (std::size_t c = 0; c < configs.size(); ++c) {
        const auto& rep = configs[c].report;
        doc.rows.row(static_cast<Eigen::Index>(c)) << static_cast<double>(configs[c].seed), rep.min_imag_eigenvalue,
            rep.max_unit_circle_deviation, rep.cholesky_ok ? 1.0 : 0.0, rep.optical_residual, rep.sigma_optical,
            rep.sigma_quadform, configs[c].pass ? 1.0 : 0.0;
    }
    return doc;
}

DiagnosticResult run_smatrix_check(const ExperimentSpec& spec, const RunOptions& opt) {
    return run_diagnostics(spec, opt, false);
}

DiagnosticResult run_spectrum(const ExperimentSpec& spec, const RunOptions& opt) {
    return run_diagnostics(spec, opt, true);
}

} // namespace lorentz
