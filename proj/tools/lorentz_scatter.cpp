// lorentz-scatter: run one Monte Carlo experiment and write its CSV.
//
//   lorentz-scatter <diff-xs|total-xs|point-xs|spectrum|smatrix-check> --spec FILE
//                   [--out FILE] [--seed U64] [--threads INT] [--configs INT] [--set KEY=VALUE]...
//
// Exit status: 0 success or PASS, 1 bad input or failed run, 2 diagnostic FAIL.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lorentz/csv.hpp"
#include "lorentz/errors.hpp"
#include "lorentz/experiment_spec.hpp"
#include "lorentz/experiments.hpp"

namespace {

using namespace lorentz;

struct Subcommand {
    const char* name;
    ExperimentKind kind;
    const char* help;
};

constexpr Subcommand subcommands[] = {
    {"diff-xs", ExperimentKind::DiffXs, "configuration-averaged differential cross section"},
    {"total-xs", ExperimentKind::TotalXsSweep, "total cross section over a k grid"},
    {"point-xs", ExperimentKind::PointXsSweep, "single-scatterer cross sections and their bound"},
    {"spectrum", ExperimentKind::Spectrum, "eigenvalues of M and |lambda_S| per configuration"},
    {"smatrix-check", ExperimentKind::SMatrixCheck, "conservation diagnostics per configuration"},
};

void emit(const CsvDocument& doc, const std::string& path) {
    if (path.empty() || path == "-") {
        write_csv(std::cout, doc);
    } else {
        write_csv_file(path, doc);
    }
}

int report(const DiagnosticResult& res) {
    std::size_t failed = 0;
    for (const auto& c : res.configs) {
        if (!c.pass) {
            ++failed;
            const auto& r = c.report;
            std::cerr << "FAIL seed=" << c.seed << " min_im_mu=" << r.min_imag_eigenvalue
                      << " unit_circle_dev=" << r.max_unit_circle_deviation << " cholesky=" << r.cholesky_ok
                      << " optical_residual=" << r.optical_residual << '\n';
        }
    }
    std::cerr << (res.all_pass ? "PASS" : "FAIL") << ": " << res.configs.size() - failed << "/"
              << res.configs.size() << " configurations\n";
    return res.all_pass ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiple scattering of a quantum particle by a random gas of point scatterers"};
    app.set_version_flag("--version", std::string(code_version));
    app.require_subcommand(1);

    std::string spec_path;
    std::string out_path;
    std::uint64_t seed = 0;
    int threads = 0;
    std::int64_t configs = 0;
    std::vector<std::string> sets;

    for (const auto& s : subcommands) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("--spec", spec_path, "flat key = value experiment file")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", out_path, "output CSV (default: standard output)");
        sub->add_option("--seed", seed, "base seed; configuration i uses seed + i");
        sub->add_option("--threads", threads, "worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
        sub->add_option("--configs", configs, "number of configurations")->check(CLI::PositiveNumber);
        sub->add_option("--set", sets, "override one spec key, KEY=VALUE");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        CLI::App* chosen = app.get_subcommands().front();
        ExperimentSpec spec = read_spec_file(spec_path, false);
        for (const auto& s : subcommands) {
            if (chosen->get_name() == s.name) {
                spec.kind = s.kind;
            }
        }
        for (const auto& kv : sets) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) {
                throw ValidationError("--set expects KEY=VALUE, got '" + kv + "'");
            }
            set_spec_key(spec, kv.substr(0, eq), kv.substr(eq + 1));
        }
        if (chosen->count("--seed")) {
            spec.seed = seed;
        }
        if (chosen->count("--configs")) {
            spec.configs = configs;
        }
        try {
            validate(spec);
        } catch (const ValidationError& e) {
            throw ValidationError(spec_path + ": " + e.what());
        }
        const RunOptions opt{threads, false};

        switch (spec.kind) {
        case ExperimentKind::DiffXs:
            emit(run_diff_xs(spec, opt).to_csv(), out_path);
            return 0;
        case ExperimentKind::TotalXsSweep:
            emit(run_total_xs_sweep(spec, opt).to_csv(), out_path);
            return 0;
        case ExperimentKind::PointXsSweep:
            emit(run_point_xs_sweep(spec).to_csv(), out_path);
            return 0;
        case ExperimentKind::Spectrum: {
            const auto res = run_spectrum(spec, opt);
            emit(res.to_csv(), out_path);
            return report(res);
        }
        case ExperimentKind::SMatrixCheck: {
            const auto res = run_smatrix_check(spec, opt);
            emit(res.to_csv(), out_path);
            return report(res);
        }
        }
    } catch (const std::exception& e) {
        std::cerr << "lorentz-scatter: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
