#include "rsslocate/pathloss.hpp"

#include <cmath>
#include <stdexcept>

namespace rsslocate {

namespace {

constexpr double kLogSqrt2Pi = 0.9189385332046727;  // log(sqrt(2*pi))

void require_at_least_reference(const PathLossParams& params, double distance_m) {
    if (distance_m < params.d0) {
        throw std::domain_error("pathloss: distance below the reference distance");
    }
}

}  // namespace

void PathLossParams::validate() const {
    if (d0 != 1.0) {
        throw std::invalid_argument("PathLossParams: reference distance is fixed to 1 m");
    }
    if (!(sigma >= 0.0)) {
        throw std::invalid_argument("PathLossParams: sigma must be >= 0");
    }
    if (!(n > 0.0)) {
        throw std::invalid_argument("PathLossParams: exponent must be > 0");
    }
}

double linear_power(double rss_dbm) { return std::pow(10.0, rss_dbm / 10.0); }

RssMeasurement make_measurement(Vec2 position, double rss_dbm) {
    return {position, rss_dbm, linear_power(rss_dbm)};
}

double rss_mean(const PathLossParams& params, double distance_m) {
    require_at_least_reference(params, distance_m);
    return params.r0 - 10.0 * params.n * std::log10(distance_m / params.d0);
}

double sample_rss(const PathLossParams& params, double distance_m, Rng& rng) {
    return rss_mean(params, distance_m) + rng.gaussian(0.0, params.sigma);
}

double rss_log_density(const PathLossParams& params, double rss_dbm, double distance_m) {
    if (params.sigma == 0.0) {
        throw std::domain_error("rss_log_density: degenerate density with sigma == 0");
    }
    const double offset = rss_dbm - rss_mean(params, distance_m);
    return -std::log(params.sigma) - kLogSqrt2Pi - offset * offset / (2.0 * params.sigma * params.sigma);
}

double ml_distance(const PathLossParams& params, double rss_dbm, double n_assumed) {
    if (!(n_assumed > 0.0)) {
        throw std::invalid_argument("ml_distance: assumed exponent must be > 0");
    }
    return params.d0 * std::pow(10.0, (params.r0 - rss_dbm) / (10.0 * n_assumed));
}

}  // namespace rsslocate
