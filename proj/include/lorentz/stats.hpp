#pragma once

// Per-point statistics of a Monte Carlo curve (one value per angle or per k,
// one sample per configuration).

#include <cstdint>
#include <span>

#include <Eigen/Core>

#include "lorentz/medium.hpp"

namespace lorentz {

struct CurveStats {
    Eigen::VectorXd mean;
    Eigen::VectorXd q1;
    Eigen::VectorXd median;
    Eigen::VectorXd q3;
    Eigen::VectorXd sem;  ///< standard error of the mean, sd / sqrt(count)
    std::int64_t count = 0;
    bool exact_quantiles = true;  ///< false once the reservoir started replacing samples

    Eigen::Index size() const { return mean.size(); }
};

/// Linear interpolation between order statistics (R type 7 / numpy default).
/// `sorted` must be ascending and non-empty.
double quantile_sorted(std::span<const double> sorted, double p);

/// Statistics of a complete sample matrix, one row per configuration.
CurveStats curve_stats(const Eigen::MatrixXd& samples);

inline constexpr std::int64_t default_reservoir_capacity = std::int64_t{1} << 16;

/// Streaming accumulator. Mean and variance use every sample (Welford).
/// Quantiles use all samples up to `capacity`; beyond that a uniform
/// reservoir of `capacity` whole rows (Vitter's algorithm R, driven by a
/// fixed-seed xoshiro256**) so results depend only on the order of add().
/// Reservoir quartiles carry a sampling error of order
/// sqrt(p(1-p)/capacity)/f(q_p), about 0.4% of the interquartile range at
/// the default capacity for smooth densities.
class CurveAccumulator {
public:
    explicit CurveAccumulator(Eigen::Index points, std::int64_t capacity = default_reservoir_capacity,
                              std::uint64_t seed = 0x5eed);

    void add(const Eigen::Ref<const Eigen::VectorXd>& sample);
    std::int64_t count() const { return count_; }
    CurveStats finish() const;

private:
    Eigen::Index points_;
    std::int64_t capacity_;
    std::int64_t count_ = 0;
    Eigen::VectorXd mean_;
    Eigen::VectorXd m2_;
    Eigen::MatrixXd reservoir_;
    Xoshiro256StarStar rng_;
};

} // namespace lorentz
