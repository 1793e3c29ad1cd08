#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "gyro/errors.hpp"
#include "gyro/vec.hpp"

namespace gyro {

/// Algebraic context: the open ball of radius s in n-dimensional Euclidean
/// space. In relativistic use s plays the role of the vacuum speed of light.
struct BallParams {
    double s = 1.0;
    int dim = 3;

    BallParams(double s_, int dim_);

    friend bool operator==(const BallParams&, const BallParams&) = default;
};

/// Absolute/relative tolerance pair for identity checks. Defaults chosen so
/// that double-precision identities hold with wide headroom away from the
/// ball boundary.
struct Tolerance {
    double abs = 1e-12;
    double rel = 1e-9;

    bool close(double a, double b) const {
        double diff = a > b ? a - b : b - a;
        double scale = std::abs(a) > std::abs(b) ? std::abs(a) : std::abs(b);
        return diff <= abs + rel * scale;
    }

    bool close(const vec::Vec& a, const vec::Vec& b) const {
        double scale = std::max(vec::norm(a), vec::norm(b));
        return vec::dist(a, b) <= abs + rel * scale;
    }
};

/// A point of the open s-ball. Validated construction (`make_ball_vector`)
/// enforces ‖coords‖ < s strictly; `unchecked` is for operation outputs whose
/// closure is guaranteed by the algebra (and for the audit's negative-control
/// op, whose closure failures the audit must be able to observe).
class BallVector {
public:
    static BallVector unchecked(vec::Vec coords, const BallParams& params) {
        return BallVector(std::move(coords), params);
    }

    static BallVector zero(const BallParams& params) {
        return BallVector(vec::Vec(static_cast<std::size_t>(params.dim), 0.0), params);
    }

    const vec::Vec& coords() const { return coords_; }
    const BallParams& params() const { return params_; }
    double s() const { return params_.s; }
    int dim() const { return params_.dim; }

    double norm_sq() const { return vec::norm_sq(coords_); }
    double norm() const { return vec::norm(coords_); }
    bool is_zero() const {
        for (double c : coords_) {
            if (c != 0.0) return false;
        }
        return true;
    }

    BallVector negated() const { return BallVector(vec::scaled(coords_, -1.0), params_); }

private:
    BallVector(vec::Vec coords, const BallParams& params)
        : coords_(std::move(coords)), params_(params) {}

    vec::Vec coords_;
    BallParams params_;
};

/// Validated construction: rejects ‖coords‖ ≥ s exactly, no clamping.
BallVector make_ball_vector(vec::Vec coords, const BallParams& params);

/// γ_v = 1/√(1 − ‖v‖²/s²), computed as 1/√((1−‖v‖/s)(1+‖v‖/s)) to avoid
/// cancellation near the boundary. Always ≥ 1; → ∞ as ‖v‖ → s.
double gamma(const BallVector& v);

/// 1/γ_v = √((1−‖v‖/s)(1+‖v‖/s)); finite (zero) on the boundary, which keeps
/// the Einstein formulas NaN-free when scalar multiplication saturates there.
double inverse_gamma(const BallVector& v);

/// atanh(‖v‖/s), via a log1p form that stays accurate for ‖v‖/s → 1.
double rapidity(const BallVector& v);

/// Inverse of `rapidity` on norms: s·tanh(r) ∈ [0, s).
double rapidity_to_norm(double r, const BallParams& params);

/// Throws ParamsMismatch unless both vectors share the same ball.
void require_same_params(const BallVector& a, const BallVector& b);

} // namespace gyro
