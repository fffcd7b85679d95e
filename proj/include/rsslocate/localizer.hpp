#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rsslocate/pathloss.hpp"

namespace rsslocate {

/// Bounded candidate set for the unknown path-loss exponent:
/// n_min, n_min + step, ..., n_max (endpoints inclusive).
struct PleGrid {
    double n_min = 1.0;
    double n_max = 5.0;
    double step = 0.1;

    std::vector<double> candidates() const;  ///< throws std::invalid_argument on a bad grid
};

/// Solution of the linearized system for one exponent candidate.
/// s is the x^2 + y^2 surrogate and is reported exactly as solved; the
/// linearization treats it as a free variable, so it is not forced to equal
/// x^2 + y^2.
struct ThetaEstimate {
    double x = 0.0;  ///< estimated transmitter x, meters
    double y = 0.0;  ///< estimated transmitter y, meters
    double s = 0.0;  ///< solved surrogate for x^2 + y^2, meters^2
    double n_used = 0.0;  ///< exponent candidate the system was built with
    double condition_diagnostic = 0.0;  ///< singular-value ratio of the system; larger = worse
};

struct PleSearchResult {
    double n_opt = 0.0;
    ThetaEstimate estimate;
    /// (candidate, discrepancy cost) over the full grid; +inf marks
    /// candidates whose system was rank-deficient.
    std::vector<std::pair<double, double>> cost_curve;
};

/// Assembles the linearized system A theta = b over the measurement history.
/// With w_i = P_i^(2/n_j), row i of A is [2 w_i p_i, 2 w_i q_i, -w_i] and
/// b_i = w_i (p_i^2 + q_i^2) - p0^(2/n_j), in measurement order.
std::pair<Eigen::MatrixXd, Eigen::VectorXd> build_system(
    const std::vector<RssMeasurement>& measurements, double p0, double n_j);

/// Minimum-norm least-squares solution of A theta = b via SVD.
/// Throws InsufficientDataError when A has fewer than 3 rows and
/// RankDeficientError when the numerical rank of A is below 3 (relative
/// singular-value tolerance 1e-10).
ThetaEstimate solve_lsq(const Eigen::MatrixXd& a, const Eigen::VectorXd& b);

/// build_system followed by solve_lsq; n_used is filled with n_j.
ThetaEstimate estimate_position(const std::vector<RssMeasurement>& measurements,
                                double p0, double n_j);

/// Discrepancy between the two distance estimates available for candidate
/// n_j, summed over the measurement history:
///   J(n_j) = sum_i ( (p0/P_i)^(1/n_j) - |(x_hat, y_hat) - (p_i, q_i)| )^2
/// Zero for noiseless data at the true exponent.
double discrepancy_cost(const std::vector<RssMeasurement>& measurements,
                        double p0, double n_j);

/// Index of the smallest finite cost in a curve; ties keep the earlier
/// (smaller) candidate. Throws DegenerateGeometryError when no cost is
/// finite.
std::size_t min_cost_index(const std::vector<std::pair<double, double>>& cost_curve);

/// Evaluates discrepancy_cost at every grid candidate and returns the
/// argmin with its estimate and the full cost curve. Rank-deficient
/// candidates contribute +inf and are excluded from the argmin.
PleSearchResult ple_grid_search(const std::vector<RssMeasurement>& measurements,
                                double p0, const PleGrid& grid = {});

}  // namespace rsslocate
