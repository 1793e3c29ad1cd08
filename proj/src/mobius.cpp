#include "gyro/mobius.hpp"

#include <cassert>
#include <cfloat>
#include <cmath>
#include <utility>

#include "dd.hpp"

namespace gyro {

DiscComplex make_disc_complex(double re, double im) {
    if (!(re * re + im * im < 1.0)) {
        throw OutOfBall("complex number lies outside the open unit disc");
    }
    return DiscComplex{{re, im}};
}

DiscComplex mob_add_disc(const DiscComplex& a, const DiscComplex& z) {
    return DiscComplex{(a.value + z.value) / (1.0 + std::conj(a.value) * z.value)};
}

UnimodularComplex mob_gyr_disc(const DiscComplex& a, const DiscComplex& b) {
    return UnimodularComplex{(1.0 + a.value * std::conj(b.value)) /
                             (1.0 + std::conj(a.value) * b.value)};
}

BallVector mob_add_ball(const BallVector& u, const BallVector& v) {
    require_same_params(u, v);
    const double s = u.s();

    // The coefficients cancel catastrophically when composed points approach
    // the boundary (the denominator behaves like (1 - ‖u‖‖v‖/s²)²), and the
    // audited identities stack several additions; double-double accumulation
    // keeps every addition accurate to ~1 ulp of its exact value.
    const dd::DD inv_s2 = dd::div({1.0, 0.0}, dd::two_prod(s, s));
    const dd::DD uv = dd::mul(dd::dot2(u.coords(), v.coords()), inv_s2);
    const dd::DD nu2 = dd::mul(dd::dot2(u.coords(), u.coords()), inv_s2);
    const dd::DD nv2 = dd::mul(dd::dot2(v.coords(), v.coords()), inv_s2);

    const dd::DD uv2 = dd::mul(uv, 2.0);
    const dd::DD cu = dd::add(dd::add(uv2, nv2), 1.0);
    const dd::DD cv = dd::add(dd::mul(nu2, -1.0), 1.0);
    const dd::DD den = dd::add(dd::add(uv2, dd::mul(nu2, nv2)), 1.0);
    assert(den.hi > 0.0); // provably positive on the open ball

    vec::Vec out(u.coords().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const dd::DD num =
            dd::add(dd::mul(cu, u.coords()[i]), dd::mul(cv, v.coords()[i]));
        out[i] = dd::div(num, den).hi;
    }
    return BallVector::unchecked(std::move(out), u.params());
}

BallVector mob_coadd(const BallVector& u, const BallVector& v) {
    require_same_params(u, v);
    const double gu2 = gamma(u) * gamma(u);
    const double gv2 = gamma(v) * gamma(v);
    const double den = gu2 + gv2 - 1.0;
    assert(den > 0.0);
    return BallVector::unchecked(vec::axpby(gu2 / den, u.coords(), gv2 / den, v.coords()),
                                 u.params());
}

BallVector scalar_mul(double r, const BallVector& v) {
    const double n = v.norm();
    // Continuous limit at the origin; avoids 0/0 in v/‖v‖.
    if (n < DBL_EPSILON * v.s()) return BallVector::zero(v.params());
    const double m = v.s() * std::tanh(r * std::atanh(n / v.s()));
    return BallVector::unchecked(vec::scaled(v.coords(), m / n), v.params());
}

double mob_gamma_of_sum(const BallVector& u, const BallVector& v) {
    require_same_params(u, v);
    const double s2 = u.s() * u.s();
    const double uv = vec::dot(u.coords(), v.coords());
    const double rad = 1.0 + 2.0 * uv / s2 + u.norm_sq() * v.norm_sq() / (s2 * s2);
    return gamma(u) * gamma(v) * std::sqrt(rad);
}

} // namespace gyro
