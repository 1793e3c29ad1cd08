#include "gyro/sampling.hpp"

#include <cmath>

namespace gyro {
namespace {

// splitmix64; stateless streams keyed by (seed, index).
struct SplitMix {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // [0, 1)
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // (0, 1]
    double uniform01_open() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    // Box-Muller; one normal per call keeps the stream stateless.
    double normal() {
        const double u1 = uniform01_open();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }
};

SplitMix stream_for(std::uint64_t seed, std::uint64_t index) {
    SplitMix a{seed};
    SplitMix b{index ^ 0xD1B54A32D192ED03ull};
    return SplitMix{a.next() ^ b.next()};
}

vec::Vec unit_direction(SplitMix& rng, int dim) {
    vec::Vec dir(static_cast<std::size_t>(dim));
    double n = 0.0;
    do {
        for (auto& c : dir) c = rng.normal();
        n = vec::norm(dir);
    } while (n < 1e-12);
    return vec::scaled(dir, 1.0 / n);
}

} // namespace

BallVector sample_ball_vector(const BallParams& params, std::uint64_t seed, std::uint64_t index,
                              double cap) {
    SplitMix rng = stream_for(seed, index);
    vec::Vec dir = unit_direction(rng, params.dim);
    const double u = rng.uniform01();
    const double r = params.s * cap * std::pow(u, 1.0 / params.dim);
    return BallVector::unchecked(vec::scaled(dir, r), params);
}

BallVector sample_ball_vector_near_boundary(const BallParams& params, std::uint64_t seed,
                                            std::uint64_t index, double lo, double hi) {
    SplitMix rng = stream_for(seed, index ^ 0xA0761D6478BD642Full);
    vec::Vec dir = unit_direction(rng, params.dim);
    const double r = params.s * (lo + (hi - lo) * rng.uniform01());
    return BallVector::unchecked(vec::scaled(dir, r), params);
}

double sample_uniform(std::uint64_t seed, std::uint64_t index, double lo, double hi) {
    SplitMix rng = stream_for(seed, index ^ 0xE7037ED1A0B428DBull);
    return lo + (hi - lo) * rng.uniform01();
}

} // namespace gyro
