#include "lorentz/medium.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>

#include "lorentz/csv.hpp"
#include "lorentz/errors.hpp"
#include "lorentz/specialfn.hpp"

namespace lorentz {

namespace {

constexpr int max_attempts = 100;

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

void check_spec(const GasSpec& spec) {
    if (spec.d < 1) {
        throw ValidationError("gas dimension must be >= 1");
    }
    if (spec.n < 1) {
        throw ValidationError("gas needs at least one scatterer");
    }
}

} // namespace

double gas_radius(int d, int n) {
    check_spec({d, n});
    return std::pow(n / special::ball_volume(d), 1.0 / d);
}

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) {
    for (auto& word : s_) {
        word = splitmix64(seed);
    }
}

Xoshiro256StarStar::Xoshiro256StarStar(const std::array<std::uint64_t, 4>& state) : s_(state) {}

std::uint64_t Xoshiro256StarStar::next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Xoshiro256StarStar::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Xoshiro256StarStar::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    const double rho = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    spare_ = rho * std::sin(phi);
    has_spare_ = true;
    return rho * std::cos(phi);
}

double min_pairwise_distance(const Eigen::MatrixXd& positions) {
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < positions.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < positions.rows(); ++j) {
            best = std::min(best, (positions.row(i) - positions.row(j)).squaredNorm());
        }
    }
    return std::sqrt(best);
}

Configuration sample_configuration(const GasSpec& spec, std::uint64_t seed, double min_separation) {
    check_spec(spec);
    const double radius = spec.radius();
    Xoshiro256StarStar rng(seed);
    Configuration cfg{spec, Eigen::MatrixXd(spec.n, spec.d), seed, min_separation, 0};
    Eigen::VectorXd g(spec.d);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        for (int i = 0; i < spec.n; ++i) {
            double norm = 0.0;
            while (norm == 0.0) {
                for (int c = 0; c < spec.d; ++c) {
                    g[c] = rng.normal();
                }
                norm = g.norm();
            }
            const double u = 1.0 - rng.uniform();  // (0, 1]
            const double r = radius * std::pow(u, 1.0 / spec.d);
            cfg.positions.row(i) = (r / norm) * g.transpose();
        }
        if (spec.n == 1 || min_pairwise_distance(cfg.positions) >= min_separation) {
            cfg.attempts = attempt;
            return cfg;
        }
    }
    throw ModelError("sample_configuration: minimum separation not met after " +
                     std::to_string(max_attempts) + " attempts (seed " + std::to_string(seed) + ")");
}

Configuration make_configuration(const Eigen::MatrixXd& positions, double min_separation) {
    if (positions.rows() < 1 || positions.cols() < 1) {
        throw ValidationError("make_configuration: empty position matrix");
    }
    Configuration cfg{{static_cast<int>(positions.cols()), static_cast<int>(positions.rows())},
                      positions, 0, min_separation, 1};
    if (positions.rows() > 1 && !(min_pairwise_distance(positions) > min_separation)) {
        throw ValidationError("make_configuration: scatterers closer than the minimum separation");
    }
    return cfg;
}

Eigen::MatrixXd pairwise_distances(const Eigen::MatrixXd& positions) {
    const Eigen::Index n = positions.rows();
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = j + 1; i < n; ++i) {
            const double dist = (positions.row(i) - positions.row(j)).norm();
            r(i, j) = dist;
            r(j, i) = dist;
        }
    }
    return r;
}

Eigen::MatrixXd pairwise_distances(const Configuration& cfg) { return pairwise_distances(cfg.positions); }

void write_configuration_csv(std::ostream& out, const Configuration& cfg) {
    CsvDocument doc;
    doc.meta = {{"d", format_number(cfg.spec.d)},
                {"N", format_number(cfg.spec.n)},
                {"R", format_number(cfg.radius())},
                {"seed", format_number(cfg.seed)},
                {"rng", std::string(Xoshiro256StarStar::name)},
                {"min_separation", format_number(cfg.min_separation)}};
    for (int c = 0; c < cfg.spec.d; ++c) {
        doc.columns.push_back("x" + std::to_string(c + 1));
    }
    doc.rows = cfg.positions;
    write_csv(out, doc);
}

} // namespace lorentz
