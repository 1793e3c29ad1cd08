#include "gyro/einstein.hpp"

#include <cassert>
#include <cstddef>
#include <utility>

#include "dd.hpp"
#include "gyro/mobius.hpp"

namespace gyro {

BallVector ein_add(const BallVector& u, const BallVector& v) {
    require_same_params(u, v);
    const double s = u.s();
    // 1/γ stays finite (zero) on the boundary, so saturated scalar-multiple
    // inputs compose without NaNs.
    const double igu = inverse_gamma(u);

    // 1 + u·v/s² cancels near inverse pairs; double-double keeps the factor
    // accurate so that stacked additions stay at ~1 ulp.
    const dd::DD inv_s2 = dd::div({1.0, 0.0}, dd::two_prod(s, s));
    const dd::DD uv_s2 = dd::mul(dd::dot2(u.coords(), v.coords()), inv_s2);
    const dd::DD den = dd::add(uv_s2, 1.0);
    assert(den.hi > 0.0);

    const dd::DD cu = dd::add(dd::mul(uv_s2, 1.0 / (1.0 + igu)), 1.0);
    const double cv = igu;

    vec::Vec out(u.coords().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const dd::DD num = dd::add(dd::mul(cu, u.coords()[i]),
                                   dd::two_prod(cv, v.coords()[i]));
        out[i] = dd::div(num, den).hi;
    }
    return BallVector::unchecked(std::move(out), u.params());
}

double ein_gamma_of_sum(const BallVector& u, const BallVector& v) {
    require_same_params(u, v);
    const double s2 = u.s() * u.s();
    return gamma(u) * gamma(v) * (1.0 + vec::dot(u.coords(), v.coords()) / s2);
}

BallVector ein_coadd(const BallVector& u, const BallVector& v) {
    require_same_params(u, v);
    const double gu = gamma(u);
    const double gv = gamma(v);
    // Gamma-weighted mean of u and v; a convex combination, so in the ball.
    const BallVector mean = BallVector::unchecked(
        vec::axpby(gu / (gu + gv), u.coords(), gv / (gu + gv), v.coords()), u.params());
    return scalar_mul(2.0, mean);
}

BallVector ein_half(const BallVector& v) {
    // γ/(1+γ) = 1/(1 + 1/γ), finite on the closed ball
    return BallVector::unchecked(
        vec::scaled(v.coords(), 1.0 / (1.0 + inverse_gamma(v))), v.params());
}

BallVector mobius_to_einstein(const BallVector& v) { return scalar_mul(2.0, v); }

BallVector einstein_to_mobius(const BallVector& v) { return ein_half(v); }

} // namespace gyro
