#pragma once

#include "gyro/ball.hpp"

namespace gyro {

/// Einstein velocity addition in the s-ball:
///   u ⊕ v = [u + v/γᵤ + (1/s²)(γᵤ/(1+γᵤ))(u·v)u] / (1 + u·v/s²)
BallVector ein_add(const BallVector& u, const BallVector& v);

/// Gamma identity for Einstein addition: γ_{u⊕v} = γᵤγᵥ(1 + u·v/s²).
double ein_gamma_of_sum(const BallVector& u, const BallVector& v);

/// Einstein coaddition, commutative: 2 ⊗ (γᵤu + γᵥv)/(γᵤ + γᵥ).
BallVector ein_coadd(const BallVector& u, const BallVector& v);

/// Einstein half: (1/2) ⊗ v = (γᵥ/(1+γᵥ)) v.
BallVector ein_half(const BallVector& v);

/// Isomorphism pair between the two ball models: doubling carries a Mobius
/// point to its Einstein image, halving goes back, so that
///   u ⊕ₑ v = 2 ⊗ (½⊗u ⊕ₘ ½⊗v)   and   u ⊕ₘ v = ½ ⊗ (2⊗u ⊕ₑ 2⊗v).
BallVector mobius_to_einstein(const BallVector& v);
BallVector einstein_to_mobius(const BallVector& v);

} // namespace gyro
