#include "lorentz/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lorentz/errors.hpp"

namespace lorentz {

double quantile_sorted(std::span<const double> sorted, double p) {
    if (sorted.empty()) {
        throw ValidationError("quantile of an empty sample");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError("quantile level outside [0, 1]");
    }
    const double h = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

namespace {

void fill_quantiles(const Eigen::MatrixXd& rows, Eigen::Index used, CurveStats& out) {
    const Eigen::Index points = rows.cols();
    out.q1.resize(points);
    out.median.resize(points);
    out.q3.resize(points);
    std::vector<double> column(static_cast<std::size_t>(used));
    for (Eigen::Index j = 0; j < points; ++j) {
        for (Eigen::Index i = 0; i < used; ++i) {
            column[static_cast<std::size_t>(i)] = rows(i, j);
        }
        std::sort(column.begin(), column.end());
        out.q1[j] = quantile_sorted(column, 0.25);
        out.median[j] = quantile_sorted(column, 0.5);
        out.q3[j] = quantile_sorted(column, 0.75);
    }
}

} // namespace

CurveStats curve_stats(const Eigen::MatrixXd& samples) {
    if (samples.rows() < 1) {
        throw ValidationError("curve_stats: no samples");
    }
    CurveAccumulator acc(samples.cols(), samples.rows());
    for (Eigen::Index i = 0; i < samples.rows(); ++i) {
        acc.add(samples.row(i).transpose());
    }
    return acc.finish();
}

CurveAccumulator::CurveAccumulator(Eigen::Index points, std::int64_t capacity, std::uint64_t seed)
    : points_(points), capacity_(capacity), mean_(Eigen::VectorXd::Zero(points)),
      m2_(Eigen::VectorXd::Zero(points)), rng_(seed) {
    if (points < 1 || capacity < 1) {
        throw ValidationError("CurveAccumulator: need at least one point and one reservoir slot");
    }
}

void CurveAccumulator::add(const Eigen::Ref<const Eigen::VectorXd>& sample) {
    if (sample.size() != points_) {
        throw ValidationError("CurveAccumulator: sample has the wrong length");
    }
    ++count_;
    const Eigen::VectorXd delta = sample - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_.array() += delta.array() * (sample - mean_).array();

    if (count_ <= capacity_) {
        if (reservoir_.rows() < count_) {
            const Eigen::Index grow =
                std::min<Eigen::Index>(capacity_, std::max<Eigen::Index>(64, 2 * reservoir_.rows()));
            reservoir_.conservativeResize(grow, points_);
        }
        reservoir_.row(count_ - 1) = sample.transpose();
        return;
    }
    const auto slot = static_cast<std::int64_t>(rng_.uniform() * static_cast<double>(count_));
    if (slot < capacity_) {
        reservoir_.row(slot) = sample.transpose();
    }
}

CurveStats CurveAccumulator::finish() const {
    if (count_ == 0) {
        throw ValidationError("CurveAccumulator: no samples");
    }
    CurveStats out;
    out.count = count_;
    out.mean = mean_;
    out.exact_quantiles = count_ <= capacity_;
    if (count_ > 1) {
        out.sem = (m2_ / static_cast<double>(count_ - 1)).cwiseSqrt() / std::sqrt(static_cast<double>(count_));
    } else {
        out.sem = Eigen::VectorXd::Zero(points_);
    }
    fill_quantiles(reservoir_, std::min(count_, capacity_), out);
    return out;
}

} // namespace lorentz
