#pragma once

// Random Lorentz gas: N scatterers uniform in a d-ball at unit density.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string_view>

#include <Eigen/Core>

namespace lorentz {

/// R = (N / V_d)^{1/d}, so that the density N / (V_d R^d) is 1.
double gas_radius(int d, int n);

struct GasSpec {
    int d = 2;
    int n = 1;

    double radius() const { return gas_radius(d, n); }
};

/// xoshiro256** 1.0 (Blackman and Vigna), state seeded by splitmix64.
class Xoshiro256StarStar {
public:
    static constexpr std::string_view name = "xoshiro256**";

    explicit Xoshiro256StarStar(std::uint64_t seed);
    /// Raw state, not all zero.
    explicit Xoshiro256StarStar(const std::array<std::uint64_t, 4>& state);

    std::uint64_t next();
    /// 53-bit uniform in [0, 1).
    double uniform();
    /// Standard normal by Box-Muller; pairs are cached.
    double normal();

private:
    std::array<std::uint64_t, 4> s_{};
    double spare_ = 0.0;
    bool has_spare_ = false;
};

struct Configuration {
    GasSpec spec;
    Eigen::MatrixXd positions;  ///< N x d, one scatterer per row
    std::uint64_t seed = 0;
    double min_separation = 0.0;
    int attempts = 1;  ///< draws needed to satisfy min_separation

    double radius() const { return spec.radius(); }
};

inline constexpr double default_min_separation = 1e-6;

/// N i.i.d. points uniform in the ball: Gaussian direction times R U^{1/d}.
/// The whole configuration is redrawn while any pair is closer than
/// min_separation; ModelError after 100 attempts.
Configuration sample_configuration(const GasSpec& spec, std::uint64_t seed,
                                   double min_separation = default_min_separation);

/// Configuration from explicit positions (tests, fixed geometries).
Configuration make_configuration(const Eigen::MatrixXd& positions, double min_separation = 0.0);

/// Symmetric N x N distance matrix with zero diagonal.
Eigen::MatrixXd pairwise_distances(const Configuration& cfg);
Eigen::MatrixXd pairwise_distances(const Eigen::MatrixXd& positions);

double min_pairwise_distance(const Eigen::MatrixXd& positions);

/// One row per scatterer with columns x1..xd, and a "# d, N, R, seed, rng" header.
void write_configuration_csv(std::ostream& out, const Configuration& cfg);

} // namespace lorentz
