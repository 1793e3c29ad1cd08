#include "doctest.h"

#include <cmath>
#include <complex>

#include "json.hpp"

#include "gyro/axioms.hpp"
#include "gyro/mobius.hpp"
#include "gyro/sampling.hpp"

using namespace gyro;

namespace {

const BallParams kUnit2(1.0, 2);
const BallParams kUnit3(1.0, 3);

std::complex<double> as_complex(const BallVector& v) {
    return {v.coords()[0], v.coords()[1]};
}

// independent determinant oracle (Laplace recursion)
double det_oracle(const Matrix& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        Matrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<double> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) row.push_back(m[r][c]);
            }
            minor.push_back(row);
        }
        acc += ((j % 2 == 0) ? 1.0 : -1.0) * m[0][j] * det_oracle(minor);
    }
    return acc;
}

} // namespace

TEST_CASE("generic gyration against the disc closed form") {
    const GyroOp op = mobius_op(kUnit2);

    SUBCASE("trivial when one argument is the identity") {
        const BallVector a = make_ball_vector({0.4, 0.1}, kUnit2);
        const BallVector z = make_ball_vector({0.2, -0.3}, kUnit2);
        const BallVector g = gyr(op, a, BallVector::zero(kUnit2), z);
        CHECK(vec::dist(g.coords(), z.coords()) < 1e-15);
    }

    SUBCASE("trivial when both arguments coincide") {
        for (std::uint64_t i = 0; i < 100; ++i) {
            const BallVector a = sample_ball_vector(kUnit2, 83, 2 * i);
            const BallVector z = sample_ball_vector(kUnit2, 83, 2 * i + 1);
            CHECK(vec::dist(gyr(op, a, a, z).coords(), z.coords()) < 1e-9);
        }
    }

    SUBCASE("rotation by (1+a conj b)/(1+conj a b)") {
        const BallVector a = make_ball_vector({0.5, 0.0}, kUnit2);
        const BallVector b = make_ball_vector({0.0, 0.3}, kUnit2);
        const BallVector z = make_ball_vector({0.1, 0.1}, kUnit2);
        const std::complex<double> expect =
            mob_gyr_disc(DiscComplex{as_complex(a)}, DiscComplex{as_complex(b)}).value *
            as_complex(z);
        const BallVector got = gyr(op, a, b, z);
        CHECK(std::abs(as_complex(got) - expect) < 1e-15);
    }

    SUBCASE("random triples match the disc oracle") {
        for (std::uint64_t i = 0; i < 300; ++i) {
            const BallVector a = sample_ball_vector(kUnit2, 89, 3 * i);
            const BallVector b = sample_ball_vector(kUnit2, 89, 3 * i + 1);
            const BallVector z = sample_ball_vector(kUnit2, 89, 3 * i + 2);
            const std::complex<double> expect =
                mob_gyr_disc(DiscComplex{as_complex(a)}, DiscComplex{as_complex(b)}).value *
                as_complex(z);
            CHECK(std::abs(as_complex(gyr(op, a, b, z)) - expect) < 1e-10);
        }
    }
}

TEST_CASE("gyration matrices are rotations") {
    SUBCASE("identity at b = 0") {
        const GyroOp op = mobius_op(kUnit3);
        const BallVector a = make_ball_vector({0.5, 0.1, -0.3}, kUnit3);
        const Matrix m = gyr_matrix(op, a, BallVector::zero(kUnit3));
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                CHECK(m[i][j] == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-9));
            }
        }
    }

    SUBCASE("dim-2 mobius matrix is the rotation by the disc gyration angle") {
        const GyroOp op = mobius_op(kUnit2);
        const BallVector a = make_ball_vector({0.5, 0.2}, kUnit2);
        const BallVector b = make_ball_vector({-0.1, 0.4}, kUnit2);
        const double ang = mob_gyr_disc(DiscComplex{as_complex(a)}, DiscComplex{as_complex(b)}).angle();
        const Matrix m = gyr_matrix(op, a, b);
        CHECK(m[0][0] == doctest::Approx(std::cos(ang)).epsilon(1e-8));
        CHECK(m[0][1] == doctest::Approx(-std::sin(ang)).epsilon(1e-8));
        CHECK(m[1][0] == doctest::Approx(std::sin(ang)).epsilon(1e-8));
        CHECK(m[1][1] == doctest::Approx(std::cos(ang)).epsilon(1e-8));
    }

    SUBCASE("orthogonal with determinant +1, both models, dims 1..5") {
        for (int dim : {1, 2, 3, 5}) {
            BallParams p(1.0, dim);
            for (const GyroOp& op : {mobius_op(p), einstein_op(p)}) {
                for (std::uint64_t i = 0; i < 25; ++i) {
                    const BallVector a = sample_ball_vector(p, 97, 2 * i);
                    const BallVector b = sample_ball_vector(p, 97, 2 * i + 1);
                    const Matrix m = gyr_matrix(op, a, b);
                    for (int r = 0; r < dim; ++r) {
                        for (int c = 0; c < dim; ++c) {
                            double dotrc = 0.0;
                            for (int k = 0; k < dim; ++k) dotrc += m[k][r] * m[k][c];
                            CHECK(std::abs(dotrc - (r == c ? 1.0 : 0.0)) < 1e-6);
                        }
                    }
                    CHECK(det_oracle(m) == doctest::Approx(1.0).epsilon(1e-6));
                }
            }
        }
    }

    SUBCASE("linearity: probes at eps and 2*eps agree") {
        const GyroOp op = einstein_op(kUnit3);
        const BallVector a = make_ball_vector({0.6, -0.1, 0.2}, kUnit3);
        const BallVector b = make_ball_vector({-0.2, 0.5, 0.1}, kUnit3);
        const Matrix m = gyr_matrix(op, a, b);
        const double eps = 2e-6;
        for (int j = 0; j < 3; ++j) {
            vec::Vec e(3, 0.0);
            e[j] = eps;
            const BallVector img = gyr(op, a, b, BallVector::unchecked(e, kUnit3));
            for (int i = 0; i < 3; ++i) {
                CHECK(img.coords()[i] / eps == doctest::Approx(m[i][j]).epsilon(1e-7));
            }
        }
    }
}

TEST_CASE("cooperation matches the closed forms") {
    for (int dim : {2, 3}) {
        BallParams p(1.0, dim);
        const GyroOp mop = mobius_op(p);
        const GyroOp eop = einstein_op(p);
        for (std::uint64_t i = 0; i < 200; ++i) {
            const BallVector a = sample_ball_vector(p, 101, 2 * i);
            const BallVector b = sample_ball_vector(p, 101, 2 * i + 1);
            CHECK(vec::dist(coadd(mop, a, b).coords(), mop.coadd_closed(a, b).coords()) < 1e-12);
            CHECK(vec::dist(coadd(eop, a, b).coords(), eop.coadd_closed(a, b).coords()) < 1e-12);
            CHECK(vec::dist(coadd(mop, a, BallVector::zero(p)).coords(), a.coords()) < 1e-15);
        }
    }
}

TEST_CASE("loop equations have the stated unique solutions") {
    const GyroOp mop = mobius_op(kUnit3);
    const GyroOp eop = einstein_op(kUnit3);

    SUBCASE("a = b gives zero solutions") {
        const BallVector a = make_ball_vector({0.2, 0.3, -0.1}, kUnit3);
        CHECK(solve_left(mop, a, a).norm() < 1e-15);
        CHECK(solve_right(mop, a, a).norm() < 1e-14);
        CHECK(solve_co_left(mop, a, a).norm() < 1e-14);
        CHECK(solve_co_right(mop, a, a).norm() < 1e-15);
    }

    SUBCASE("residuals vanish for random pairs") {
        for (std::uint64_t i = 0; i < 200; ++i) {
            const BallVector a = sample_ball_vector(kUnit3, 103, 2 * i);
            const BallVector b = sample_ball_vector(kUnit3, 103, 2 * i + 1);

            CHECK(vec::dist(mop.add(a, solve_left(mop, a, b)).coords(), b.coords()) < 1e-13);
            CHECK(vec::dist(eop.add(solve_right(eop, a, b), a).coords(), b.coords()) < 1e-12);
            CHECK(vec::dist(coadd(mop, a, solve_co_left(mop, a, b)).coords(), b.coords()) < 1e-12);
            CHECK(vec::dist(coadd(mop, solve_co_right(mop, a, b), a).coords(), b.coords()) < 1e-12);

            // gyrocommutative, so the two coloop solutions coincide
            CHECK(vec::dist(solve_co_left(mop, a, b).coords(),
                            solve_co_right(mop, a, b).coords()) < 1e-13);
        }
    }

    SUBCASE("perturbing the solution grows the residual linearly") {
        const BallVector a = make_ball_vector({0.4, -0.2, 0.1}, kUnit3);
        const BallVector b = make_ball_vector({-0.3, 0.1, 0.5}, kUnit3);
        const BallVector x = solve_left(mop, a, b);
        for (double delta : {1e-6, 1e-5, 1e-4}) {
            vec::Vec perturbed = x.coords();
            perturbed[0] += delta;
            const double res = vec::dist(
                mop.add(a, BallVector::unchecked(perturbed, kUnit3)).coords(), b.coords());
            CHECK(res > 0.1 * delta);
            CHECK(res < 10.0 * delta);
        }
    }
}

TEST_CASE("audit passes for both models and flags the negative control") {
    const Tolerance tol{1e-12, 1e-9};

    SUBCASE("mobius dim 3") {
        const AxiomReport r = audit(mobius_op(kUnit3), 1000, 42, tol);
        for (const auto& id : r.identities) {
            INFO(id.name, " residual ", id.max_residual);
            CHECK(id.pass);
        }
        CHECK(r.all_pass());
    }

    SUBCASE("einstein dim 3") {
        const AxiomReport r = audit(einstein_op(kUnit3), 1000, 42, tol);
        for (const auto& id : r.identities) {
            INFO(id.name, " residual ", id.max_residual);
            CHECK(id.pass);
        }
        CHECK(r.all_pass());
    }

    SUBCASE("vector addition fails closure but not the trivial-gyr identities") {
        const AxiomReport r = audit(vector_addition_op(kUnit3), 1000, 42, tol);
        CHECK_FALSE(r.all_pass());
        bool closure_failed = false;
        for (const auto& id : r.identities) {
            if (id.name == "closure") {
                closure_failed = !id.pass;
            } else {
                CHECK(id.pass); // gyr = identity, so the algebraic identities hold
            }
        }
        CHECK(closure_failed);
    }

    SUBCASE("deterministic: same seed gives a byte-identical report") {
        const std::string a = audit(mobius_op(kUnit2), 200, 7, tol).to_json();
        const std::string b = audit(mobius_op(kUnit2), 200, 7, tol).to_json();
        CHECK(a == b);
        const std::string c = audit(mobius_op(kUnit2), 200, 8, tol).to_json();
        CHECK(a != c);
    }

    SUBCASE("invalid parameters are rejected") {
        CHECK_THROWS(audit(mobius_op(kUnit2), 0, 1, tol));
        CHECK_THROWS(audit(mobius_op(kUnit2), 10, 1, Tolerance{0.0, 0.0}));
        CHECK_THROWS(audit(mobius_op(kUnit2), 10, 1, Tolerance{-1e-9, 1e-9}));
    }

    SUBCASE("report JSON carries the documented schema") {
        const AxiomReport r = audit(einstein_op(kUnit2), 50, 3, tol);
        const nlohmann::json j = nlohmann::json::parse(r.to_json());
        CHECK(j["op"] == "einstein");
        CHECK(j["dim"] == 2);
        CHECK(j["s"] == 1.0);
        CHECK(j["seed"] == 3);
        REQUIRE(j["identities"].is_array());
        REQUIRE(j["identities"].size() >= 18);
        for (const auto& id : j["identities"]) {
            CHECK(id.contains("name"));
            CHECK(id.contains("samples"));
            CHECK(id.contains("max_residual"));
            CHECK(id.contains("pass"));
        }
    }
}
