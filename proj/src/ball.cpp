#include "gyro/ball.hpp"

#include <cmath>
#include <string>

namespace gyro {

BallParams::BallParams(double s_, int dim_) : s(s_), dim(dim_) {
    if (!(s > 0.0)) throw GyroError(errc::out_of_ball, "ball radius s must be positive");
    if (dim < 1) throw GyroError(errc::dimension_mismatch, "ball dimension must be >= 1");
}

BallVector make_ball_vector(vec::Vec coords, const BallParams& params) {
    if (coords.size() != static_cast<std::size_t>(params.dim)) {
        throw DimensionMismatch("coordinate count " + std::to_string(coords.size()) +
                                " does not match ball dimension " + std::to_string(params.dim));
    }
    const double n = vec::norm(coords);
    if (!(n < params.s)) {
        throw OutOfBall("vector norm " + std::to_string(n) + " is not inside the open ball of radius " +
                        std::to_string(params.s));
    }
    return BallVector::unchecked(std::move(coords), params);
}

double gamma(const BallVector& v) {
    const double x = v.norm() / v.s();
    return 1.0 / std::sqrt((1.0 - x) * (1.0 + x));
}

double inverse_gamma(const BallVector& v) {
    const double x = v.norm() / v.s();
    return std::sqrt((1.0 - x) * (1.0 + x));
}

double rapidity(const BallVector& v) {
    const double x = v.norm() / v.s();
    // atanh(x) = log1p(2x/(1-x))/2; keeps full precision as x -> 1.
    return 0.5 * std::log1p(2.0 * x / (1.0 - x));
}

double rapidity_to_norm(double r, const BallParams& params) {
    return params.s * std::tanh(r);
}

void require_same_params(const BallVector& a, const BallVector& b) {
    if (a.params().dim != b.params().dim) {
        throw DimensionMismatch("operands live in balls of different dimension");
    }
    if (!(a.params() == b.params())) {
        throw ParamsMismatch("operands live in balls with different radius s");
    }
}

} // namespace gyro
