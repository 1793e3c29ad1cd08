#pragma once

#include <cstdint>

#include "gyro/ball.hpp"

namespace gyro {

/// Deterministic ball sampling: the value depends only on (seed, index), so
/// sample streams can be evaluated in any order (or concurrently) and still
/// reproduce byte-identical reports.
///
/// Direction is uniform on the sphere; the norm follows s·cap·u^(1/n), the
/// radial law of the uniform distribution on the cap-scaled ball. The default
/// cap of 0.95 keeps identity checks away from tolerance blowup at the
/// boundary.
BallVector sample_ball_vector(const BallParams& params, std::uint64_t seed, std::uint64_t index,
                              double cap = 0.95);

/// Near-boundary variant: norm uniform in (lo, hi)·s.
BallVector sample_ball_vector_near_boundary(const BallParams& params, std::uint64_t seed,
                                            std::uint64_t index, double lo = 0.99,
                                            double hi = 0.999999);

/// Scalar stream with the same (seed, index) determinism contract.
double sample_uniform(std::uint64_t seed, std::uint64_t index, double lo, double hi);

} // namespace gyro
