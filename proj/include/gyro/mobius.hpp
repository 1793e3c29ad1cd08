#pragma once

#include <complex>

#include "gyro/ball.hpp"

namespace gyro {

/// Point of the open complex unit disc, |z| < 1. Oracle domain for the
/// two-dimensional ball: the disc formulas have exact closed forms that the
/// vector formulas must reproduce under (x, y) ≅ x + iy.
struct DiscComplex {
    std::complex<double> value;

    double re() const { return value.real(); }
    double im() const { return value.imag(); }
};

/// Unit-modulus complex number; carrier of disc gyrations (rotations).
struct UnimodularComplex {
    std::complex<double> value;

    double angle() const { return std::arg(value); }
};

/// Validated disc membership, |z| < 1 strictly.
DiscComplex make_disc_complex(double re, double im);

/// a ⊕ z = (a + z)/(1 + conj(a) z). Denominator cannot vanish inside the disc.
DiscComplex mob_add_disc(const DiscComplex& a, const DiscComplex& z);

/// gyr[a,b] = (1 + a conj(b))/(1 + conj(a) b), a unimodular rotation factor.
UnimodularComplex mob_gyr_disc(const DiscComplex& a, const DiscComplex& b);

/// Mobius addition in the n-ball:
///   u ⊕ v = [(1 + 2u·v/s² + ‖v‖²/s²) u + (1 − ‖u‖²/s²) v]
///           / [1 + 2u·v/s² + ‖u‖²‖v‖²/s⁴]
BallVector mob_add_ball(const BallVector& u, const BallVector& v);

/// Mobius coaddition, commutative: (γᵤ²u + γᵥ²v)/(γᵤ² + γᵥ² − 1).
BallVector mob_coadd(const BallVector& u, const BallVector& v);

/// r ⊗ v = s·tanh(r·atanh(‖v‖/s))·v/‖v‖, with r ⊗ 0 = 0. Shared by the
/// Mobius and Einstein gyrovector spaces.
BallVector scalar_mul(double r, const BallVector& v);

/// Gamma identity for Mobius addition:
///   γ_{u⊕v} = γᵤγᵥ √(1 + 2u·v/s² + ‖u‖²‖v‖²/s⁴)
double mob_gamma_of_sum(const BallVector& u, const BallVector& v);

} // namespace gyro
