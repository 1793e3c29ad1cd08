#pragma once

#include <array>
#include <complex>

#include "gyro/ball.hpp"

namespace gyro {

/// 2×2 qubit density matrix, ½(I + v·σ) for a Bloch vector v in the open
/// unit ball. Hermitian, trace one, positive definite on the open ball.
struct QubitDensity {
    // row-major entries: (0,0), (0,1), (1,0), (1,1)
    std::array<std::complex<double>, 4> entries;

    std::complex<double> trace() const { return entries[0] + entries[3]; }
    std::complex<double> det() const { return entries[0] * entries[3] - entries[1] * entries[2]; }
};

/// ρ = ½ [[1+v₃, v₁−iv₂], [v₁+iv₂, 1−v₃]]. Requires dim 3, s = 1.
QubitDensity density_from_bloch(const BallVector& v);

/// Inverse map: v = (2 Re ρ₂₁, 2 Im ρ₂₁, ρ₁₁ − ρ₂₂). Throws OutOfBall when
/// the recovered vector is not strictly inside the unit ball.
BallVector bloch_from_density(const QubitDensity& rho);

/// Bloch vector w with ρᵤρᵥρᵥρᵤ = tr[ρᵤρᵥρᵥρᵤ]·ρ_w, computed two ways,
///   w = u ⊕ₘ (2⊗v ⊕ₘ u) = 2⊗(u ⊕ₘ v),
/// which must agree.
BallVector two_sum_bloch(const BallVector& u, const BallVector& v);

enum class FidelityMethod { matrix, gyro };

/// Bures fidelity between the states of two Bloch vectors. The matrix method
/// evaluates [tr √(√ρᵤ ρᵥ √ρᵤ)]² through explicit Hermitian square roots;
/// the gyro method evaluates ½(1 + γ_{u⊕ₑv})/(γᵤγᵥ).
double bures_fidelity(const BallVector& u, const BallVector& v, FidelityMethod method);

} // namespace gyro
