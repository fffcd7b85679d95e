#pragma once

#include "rsslocate/geometry.hpp"
#include "rsslocate/rng.hpp"

namespace rsslocate {

/// Log-distance channel with lognormal shadowing:
///   R = r0 - 10 n log10(d / d0) + X,   X ~ Normal(0, sigma^2)
/// where R is the received signal strength in dBm at distance d meters.
struct PathLossParams {
    double r0 = -27.0;   ///< RSS at the reference distance, dBm
    double n = 3.0;      ///< path-loss exponent
    double sigma = 3.0;  ///< shadow-noise standard deviation, dB
    double d0 = 1.0;     ///< reference distance, meters; the model fixes 1 m

    /// Throws std::invalid_argument unless d0 == 1, sigma >= 0 and n > 0.
    void validate() const;
};

/// One RSS sample taken at a known receiver position.
struct RssMeasurement {
    Vec2 position;        ///< receiver position, meters
    double rss = 0.0;     ///< measured RSS, dBm (shadow noise included)
    double linear_power = 0.0;  ///< 10^(rss/10), cached linear-scale power
};

/// dBm -> linear power, 10^(rss/10). Strictly positive and monotone.
double linear_power(double rss_dbm);

/// Builds a measurement with the linear power cached.
RssMeasurement make_measurement(Vec2 position, double rss_dbm);

/// Mean RSS at distance d (the model with zero shadow noise).
/// Throws std::domain_error if d < d0: the model is undefined below the
/// reference distance.
double rss_mean(const PathLossParams& params, double distance_m);

/// Mean RSS plus one shadow-noise draw from rng.
double sample_rss(const PathLossParams& params, double distance_m, Rng& rng);

/// Log of the normalized Gaussian density of an RSS value at distance d.
/// Throws std::domain_error if sigma == 0 (degenerate density) or d < d0.
double rss_log_density(const PathLossParams& params, double rss_dbm, double distance_m);

/// Maximum-likelihood distance for a measured RSS under an assumed exponent:
///   d = d0 * 10^((r0 - rss) / (10 n_assumed)) = d0 * (p0 / p)^(1 / n_assumed).
/// Inverts rss_mean when n_assumed is the true exponent and rss is noiseless.
/// The result may exceed any map bounds; callers decide what to do with it.
double ml_distance(const PathLossParams& params, double rss_dbm, double n_assumed);

}  // namespace rsslocate
