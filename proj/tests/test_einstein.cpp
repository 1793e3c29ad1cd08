#include "doctest.h"

#include <cmath>

#include "gyro/einstein.hpp"
#include "gyro/mobius.hpp"
#include "gyro/sampling.hpp"

using namespace gyro;

namespace {
const BallParams kUnit3(1.0, 3);
BallVector b3(double x, double y, double z) { return make_ball_vector({x, y, z}, kUnit3); }
} // namespace

TEST_CASE("einstein addition") {
    SUBCASE("left identity and left inverse") {
        const BallVector v = b3(0.1, -0.2, 0.4);
        CHECK(vec::dist(ein_add(BallVector::zero(kUnit3), v).coords(), v.coords()) < 1e-16);
        const BallVector a = b3(0.3, 0.0, 0.0);
        CHECK(ein_add(a, a.negated()).norm() < 1e-16);
    }

    SUBCASE("collinear case reduces to (u+v)/(1+uv)") {
        const BallVector u = b3(0.6, 0.0, 0.0);
        const BallVector w = ein_add(u, u);
        CHECK(w.coords()[0] == doctest::Approx(1.2 / 1.36).epsilon(1e-15));
        CHECK(w.coords()[1] == doctest::Approx(0.0));
        CHECK(w.coords()[2] == doctest::Approx(0.0));
    }

    SUBCASE("1905 parallel/orthogonal decomposition") {
        for (std::uint64_t i = 0; i < 300; ++i) {
            const BallVector u = sample_ball_vector(kUnit3, 51, 2 * i);
            const BallVector v = sample_ball_vector(kUnit3, 51, 2 * i + 1);
            if (u.norm() < 1e-6) continue;
            const double uv = vec::dot(u.coords(), v.coords());
            const vec::Vec vpar = vec::scaled(u.coords(), uv / u.norm_sq());
            const vec::Vec vperp = vec::sub(v.coords(), vpar);
            const double gu = gamma(u);
            const double den = 1.0 + uv;
            const vec::Vec wpar = vec::scaled(vec::add(u.coords(), vpar), 1.0 / den);
            const vec::Vec wperp = vec::scaled(vperp, 1.0 / (gu * den));
            CHECK(vec::dist(ein_add(u, v).coords(), vec::add(wpar, wperp)) < 1e-14);
        }
    }

    SUBCASE("stays inside the ball") {
        for (std::uint64_t i = 0; i < 500; ++i) {
            const BallVector u = sample_ball_vector(kUnit3, 53, 2 * i);
            const BallVector v = sample_ball_vector(kUnit3, 53, 2 * i + 1);
            CHECK(ein_add(u, v).norm() < 1.0);
        }
    }

    SUBCASE("large s approaches vector addition at rate 1/s^2") {
        const vec::Vec uc{0.25, -0.3, 0.05};
        const vec::Vec vc{0.15, 0.2, -0.35};
        double prev = 0.0;
        for (int k = 0; k < 3; ++k) {
            const double s = std::pow(10.0, k + 1);
            BallParams ps(s, 3);
            const double err = vec::dist(
                ein_add(make_ball_vector(uc, ps), make_ball_vector(vc, ps)).coords(),
                vec::add(uc, vc));
            if (k > 0) {
                CHECK(prev / err > 50.0);
                CHECK(prev / err < 200.0);
            }
            prev = err;
        }
    }
}

TEST_CASE("einstein gamma identity") {
    const BallVector u = b3(0.6, 0.0, 0.0);

    CHECK(ein_gamma_of_sum(BallVector::zero(kUnit3), u) ==
          doctest::Approx(gamma(u)).epsilon(1e-15));
    CHECK(ein_gamma_of_sum(u, u) == doctest::Approx(2.125).epsilon(1e-15));
    CHECK(ein_gamma_of_sum(u, u.negated()) == doctest::Approx(1.0).epsilon(1e-15));

    for (std::uint64_t i = 0; i < 500; ++i) {
        const BallVector a = sample_ball_vector(kUnit3, 57, 2 * i);
        const BallVector b = sample_ball_vector(kUnit3, 57, 2 * i + 1);
        CHECK(ein_gamma_of_sum(a, b) == doctest::Approx(gamma(ein_add(a, b))).epsilon(1e-10));
    }
}

TEST_CASE("einstein coaddition") {
    SUBCASE("u boxplus u = 2 (x) u and zero is neutral") {
        const BallVector u = b3(0.4, 0.1, -0.2);
        CHECK(vec::dist(ein_coadd(u, u).coords(), scalar_mul(2.0, u).coords()) < 1e-15);
        CHECK(vec::dist(ein_coadd(u, BallVector::zero(kUnit3)).coords(), u.coords()) < 1e-15);
        CHECK(ein_coadd(u, u.negated()).norm() < 1e-15);
    }

    SUBCASE("commutative on random pairs") {
        for (std::uint64_t i = 0; i < 200; ++i) {
            const BallVector a = sample_ball_vector(kUnit3, 61, 2 * i);
            const BallVector b = sample_ball_vector(kUnit3, 61, 2 * i + 1);
            CHECK(vec::dist(ein_coadd(a, b).coords(), ein_coadd(b, a).coords()) < 1e-15);
        }
    }

    SUBCASE("swap symmetry at a right angle") {
        BallParams p2(1.0, 2);
        const BallVector u = make_ball_vector({0.5, 0.0}, p2);
        const BallVector v = make_ball_vector({0.0, 0.5}, p2);
        const BallVector uv = ein_coadd(u, v);
        const BallVector vu = ein_coadd(v, u);
        CHECK(uv.coords()[0] == doctest::Approx(vu.coords()[0]).epsilon(1e-15));
        CHECK(uv.coords()[1] == doctest::Approx(vu.coords()[1]).epsilon(1e-15));
    }
}

TEST_CASE("einstein half") {
    CHECK(ein_half(BallVector::zero(kUnit3)).is_zero());

    const BallVector v = b3(0.8, 0.0, 0.0);
    CHECK(ein_half(v).coords()[0] == doctest::Approx(0.5).epsilon(1e-15));

    for (std::uint64_t i = 0; i < 100; ++i) {
        const BallVector w = sample_ball_vector(kUnit3, 67, i);
        CHECK(vec::dist(scalar_mul(2.0, ein_half(w)).coords(), w.coords()) < 1e-12);
        CHECK(vec::dist(ein_half(w).coords(), scalar_mul(0.5, w).coords()) < 1e-13);
    }
}

TEST_CASE("mobius/einstein isomorphism") {
    SUBCASE("zero maps to zero, round trip is the identity") {
        CHECK(mobius_to_einstein(BallVector::zero(kUnit3)).is_zero());
        CHECK(einstein_to_mobius(BallVector::zero(kUnit3)).is_zero());
        for (std::uint64_t i = 0; i < 100; ++i) {
            const BallVector v = sample_ball_vector(kUnit3, 71, i);
            const BallVector back = einstein_to_mobius(mobius_to_einstein(v));
            CHECK(vec::dist(back.coords(), v.coords()) < 1e-12);
        }
    }

    SUBCASE("einstein addition through the mobius route") {
        for (std::uint64_t i = 0; i < 500; ++i) {
            const BallVector u = sample_ball_vector(kUnit3, 73, 2 * i);
            const BallVector v = sample_ball_vector(kUnit3, 73, 2 * i + 1);
            const BallVector direct = ein_add(u, v);
            const BallVector routed =
                scalar_mul(2.0, mob_add_ball(scalar_mul(0.5, u), scalar_mul(0.5, v)));
            CHECK(vec::dist(direct.coords(), routed.coords()) < 1e-12);
        }
    }

    SUBCASE("mobius addition through the einstein route") {
        for (std::uint64_t i = 0; i < 500; ++i) {
            const BallVector u = sample_ball_vector(kUnit3, 79, 2 * i);
            const BallVector v = sample_ball_vector(kUnit3, 79, 2 * i + 1);
            const BallVector direct = mob_add_ball(u, v);
            const BallVector routed =
                scalar_mul(0.5, ein_add(scalar_mul(2.0, u), scalar_mul(2.0, v)));
            CHECK(vec::dist(direct.coords(), routed.coords()) < 1e-11);
        }
    }
}
