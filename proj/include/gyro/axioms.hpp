#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gyro/ball.hpp"

namespace gyro {

/// An abstract ball operation with its negation and identity. The engine
/// below derives gyrations, the cooperation, and loop-equation solutions from
/// these three ingredients alone, so any candidate operation can be audited
/// against the gyrogroup axioms.
///
/// `coadd_closed` is an optional independent closed form of the cooperation;
/// when present the audit cross-checks it against the definitional one.
struct GyroOp {
    std::string label;
    BallParams params;
    std::function<BallVector(const BallVector&, const BallVector&)> add;
    std::function<BallVector(const BallVector&)> neg;
    std::function<BallVector(const BallVector&, const BallVector&)> coadd_closed;
    BallVector zero;
};

GyroOp mobius_op(const BallParams& params);
GyroOp einstein_op(const BallParams& params);

/// Negative control: plain vector addition on ball samples. Not a gyrogroup
/// operation (closure fails); used to prove the audit is non-vacuous.
GyroOp vector_addition_op(const BallParams& params);

/// Gyration by definition: gyr[a,b]z = ⊖(a⊕b) ⊕ (a⊕(b⊕z)).
BallVector gyr(const GyroOp& op, const BallVector& a, const BallVector& b, const BallVector& z);

/// The gyration materialized as an n×n matrix by probing scaled basis
/// vectors. Gyrations of the ball models extend to orthogonal maps, so the
/// result is orthogonal with determinant +1 up to probe error.
using Matrix = std::vector<std::vector<double>>;
Matrix gyr_matrix(const GyroOp& op, const BallVector& a, const BallVector& b);

/// Cooperation by definition: a ⊞ b = a ⊕ gyr[a,⊖b]b, and a ⊟ b = a ⊞ (⊖b).
BallVector coadd(const GyroOp& op, const BallVector& a, const BallVector& b);
BallVector cosub(const GyroOp& op, const BallVector& a, const BallVector& b);

/// Unique solutions of the loop equations a⊕x = b and y⊕a = b.
BallVector solve_left(const GyroOp& op, const BallVector& a, const BallVector& b);
BallVector solve_right(const GyroOp& op, const BallVector& a, const BallVector& b);

/// Unique solutions of the coloop equations a⊞x = b and y⊞a = b.
BallVector solve_co_left(const GyroOp& op, const BallVector& a, const BallVector& b);
BallVector solve_co_right(const GyroOp& op, const BallVector& a, const BallVector& b);

struct IdentityResult {
    std::string name;
    int samples = 0;
    double max_residual = 0.0;
    bool pass = false;
};

/// Per-identity residual summary of one audit run. Residuals are relative:
/// ‖lhs − rhs‖ / (s + max(‖lhs‖, ‖rhs‖)).
struct AxiomReport {
    std::string op;
    int dim = 0;
    double s = 0.0;
    std::uint64_t seed = 0;
    std::vector<IdentityResult> identities;

    bool all_pass() const;
    std::string to_json() const;
};

/// Evaluates every gyrogroup identity on `samples` deterministic random
/// draws (5% of them near-degenerate, a ≈ ⊖b, to stress denominators).
/// Failures are reported, never thrown.
AxiomReport audit(const GyroOp& op, int samples, std::uint64_t seed, const Tolerance& tol = {});

} // namespace gyro
