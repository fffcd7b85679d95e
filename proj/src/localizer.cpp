#include "rsslocate/localizer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rsslocate/errors.hpp"

namespace rsslocate {

namespace {

// Relative singular-value tolerance separating truly degenerate geometry
// from noise.
constexpr double kRankTolerance = 1e-10;

double residual_cost(const std::vector<RssMeasurement>& measurements, double p0,
                     double n_j, const ThetaEstimate& estimate) {
    double cost = 0.0;
    for (const auto& m : measurements) {
        const double d_direct = std::pow(p0 / m.linear_power, 1.0 / n_j);
        const double d_lsq = std::hypot(estimate.x - m.position.x, estimate.y - m.position.y);
        const double diff = d_direct - d_lsq;
        cost += diff * diff;
    }
    return cost;
}

}  // namespace

std::vector<double> PleGrid::candidates() const {
    if (!(step > 0.0) || !(n_min > 0.0) || n_max < n_min) {
        throw std::invalid_argument("PleGrid: requires 0 < n_min <= n_max and step > 0");
    }
    const auto count = static_cast<int>(std::llround((n_max - n_min) / step)) + 1;
    std::vector<double> values(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        values[static_cast<std::size_t>(i)] = n_min + i * step;
    }
    return values;
}

std::pair<Eigen::MatrixXd, Eigen::VectorXd> build_system(
    const std::vector<RssMeasurement>& measurements, double p0, double n_j) {
    if (measurements.empty()) {
        throw std::invalid_argument("build_system: no measurements");
    }
    if (!(n_j > 0.0)) {
        throw std::invalid_argument("build_system: exponent candidate must be > 0");
    }
    if (!(p0 > 0.0)) {
        throw std::invalid_argument("build_system: reference power must be > 0");
    }

    const double exponent = 2.0 / n_j;
    const double p0_pow = std::pow(p0, exponent);
    const auto rows = static_cast<Eigen::Index>(measurements.size());
    Eigen::MatrixXd a(rows, 3);
    Eigen::VectorXd b(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& m = measurements[static_cast<std::size_t>(i)];
        const double w = std::pow(m.linear_power, exponent);
        const double px = m.position.x;
        const double qy = m.position.y;
        a(i, 0) = 2.0 * w * px;
        a(i, 1) = 2.0 * w * qy;
        a(i, 2) = -w;
        b(i) = w * (px * px + qy * qy) - p0_pow;
    }
    return {std::move(a), std::move(b)};
}

ThetaEstimate solve_lsq(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
    if (a.rows() != b.size() || a.cols() != 3) {
        throw std::invalid_argument("solve_lsq: system shape mismatch");
    }
    if (a.rows() < 3) {
        throw InsufficientDataError("solve_lsq: need at least 3 measurements for 3 unknowns");
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(kRankTolerance);
    const auto& sv = svd.singularValues();
    if (!(sv(0) > 0.0) || sv(2) <= kRankTolerance * sv(0)) {
        throw RankDeficientError("solve_lsq: numerically rank-deficient geometry");
    }

    const Eigen::Vector3d theta = svd.solve(b);
    ThetaEstimate estimate;
    estimate.x = theta(0);
    estimate.y = theta(1);
    estimate.s = theta(2);
    estimate.n_used = std::numeric_limits<double>::quiet_NaN();
    estimate.condition_diagnostic = sv(0) / sv(2);
    return estimate;
}

ThetaEstimate estimate_position(const std::vector<RssMeasurement>& measurements,
                                double p0, double n_j) {
    const auto [a, b] = build_system(measurements, p0, n_j);
    ThetaEstimate estimate = solve_lsq(a, b);
    estimate.n_used = n_j;
    return estimate;
}

double discrepancy_cost(const std::vector<RssMeasurement>& measurements,
                        double p0, double n_j) {
    return residual_cost(measurements, p0, n_j, estimate_position(measurements, p0, n_j));
}

std::size_t min_cost_index(const std::vector<std::pair<double, double>>& cost_curve) {
    std::size_t best = cost_curve.size();
    for (std::size_t i = 0; i < cost_curve.size(); ++i) {
        if (!std::isfinite(cost_curve[i].second)) continue;
        if (best == cost_curve.size() || cost_curve[i].second < cost_curve[best].second) {
            best = i;
        }
    }
    if (best == cost_curve.size()) {
        throw DegenerateGeometryError("grid search: every exponent candidate was rank-deficient");
    }
    return best;
}

PleSearchResult ple_grid_search(const std::vector<RssMeasurement>& measurements,
                                double p0, const PleGrid& grid) {
    if (measurements.size() < 3) {
        throw InsufficientDataError("grid search: need at least 3 measurements");
    }

    const auto candidates = grid.candidates();
    PleSearchResult result;
    result.cost_curve.reserve(candidates.size());
    for (const double n_j : candidates) {
        double cost = std::numeric_limits<double>::infinity();
        try {
            cost = discrepancy_cost(measurements, p0, n_j);
        } catch (const RankDeficientError&) {
            // excluded from the argmin; recorded as +inf in the curve
        }
        result.cost_curve.emplace_back(n_j, cost);
    }

    const std::size_t best = min_cost_index(result.cost_curve);
    result.n_opt = candidates[best];
    result.estimate = estimate_position(measurements, p0, candidates[best]);
    return result;
}

}  // namespace rsslocate
