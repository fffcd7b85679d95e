#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace rsslocate {

/// Explicitly seeded pseudo-random source. Every draw is a pure function of
/// the seed and the draw history; there is no global state. derive() yields
/// an independent stream keyed by (seed, salt) without consuming from this
/// one, so concurrent workers can each own a stream.
///
/// The Gaussian and bounded-integer transforms are pinned here instead of
/// using std::normal_distribution / std::uniform_int_distribution, whose
/// algorithms are implementation-defined and would break bit-reproducibility
/// across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed, 0x243F6A8885A308D3ull)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, n). Lemire multiply-shift with rejection, so
    /// the result is exactly uniform.
    std::uint64_t bounded(std::uint64_t n) {
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(next_u64()) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// One Gaussian draw via Box-Muller. Always consumes exactly two
    /// uniforms, so the stream position is independent of past values.
    double gaussian(double mean, double stddev) {
        const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;        // [0, 1)
        const double radius = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * radius * std::cos(2.0 * pi() * u2);
    }

    /// Independent stream determined by (seed, salt); does not consume draws.
    Rng derive(std::uint64_t salt) const { return Rng(mix(seed_, salt)); }

    std::uint64_t seed() const { return seed_; }

    /// SplitMix64-style avalanche of two words into one.
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        std::uint64_t z = a + 0x9E3779B97F4A7C15ull + b * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    static constexpr double pi() { return 3.141592653589793238462643383279502884; }

    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace rsslocate
