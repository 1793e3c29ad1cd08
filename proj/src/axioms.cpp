#include "gyro/axioms.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>

#include "gyro/einstein.hpp"
#include "gyro/mobius.hpp"
#include "gyro/sampling.hpp"

namespace gyro {

GyroOp mobius_op(const BallParams& params) {
    return GyroOp{"mobius", params, &mob_add_ball,
                  [](const BallVector& v) { return v.negated(); }, &mob_coadd,
                  BallVector::zero(params)};
}

GyroOp einstein_op(const BallParams& params) {
    return GyroOp{"einstein", params, &ein_add,
                  [](const BallVector& v) { return v.negated(); }, &ein_coadd,
                  BallVector::zero(params)};
}

GyroOp vector_addition_op(const BallParams& params) {
    auto add = [](const BallVector& u, const BallVector& v) {
        require_same_params(u, v);
        return BallVector::unchecked(vec::add(u.coords(), v.coords()), u.params());
    };
    return GyroOp{"vector", params, add, [](const BallVector& v) { return v.negated(); },
                  add, // the cooperation of a group is the group operation itself
                  BallVector::zero(params)};
}

BallVector gyr(const GyroOp& op, const BallVector& a, const BallVector& b, const BallVector& z) {
    const BallVector ab = op.add(a, b);
    return op.add(op.neg(ab), op.add(a, op.add(b, z)));
}

Matrix gyr_matrix(const GyroOp& op, const BallVector& a, const BallVector& b) {
    const int n = op.params.dim;
    // The gyration extends to an orthogonal linear map, so the probe scale
    // costs no truncation error; 1e-4 keeps the rounding noise of the
    // defining composition well below the 1e-6 orthogonality bound.
    const double eps = 1e-4 * op.params.s;
    Matrix m(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int j = 0; j < n; ++j) {
        vec::Vec e(static_cast<std::size_t>(n), 0.0);
        e[static_cast<std::size_t>(j)] = eps;
        const BallVector img = gyr(op, a, b, BallVector::unchecked(e, op.params));
        for (int i = 0; i < n; ++i) {
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                img.coords()[static_cast<std::size_t>(i)] / eps;
        }
    }
    return m;
}

BallVector coadd(const GyroOp& op, const BallVector& a, const BallVector& b) {
    return op.add(a, gyr(op, a, op.neg(b), b));
}

BallVector cosub(const GyroOp& op, const BallVector& a, const BallVector& b) {
    return coadd(op, a, op.neg(b));
}

BallVector solve_left(const GyroOp& op, const BallVector& a, const BallVector& b) {
    return op.add(op.neg(a), b);
}

BallVector solve_right(const GyroOp& op, const BallVector& a, const BallVector& b) {
    return cosub(op, b, a);
}

BallVector solve_co_left(const GyroOp& op, const BallVector& a, const BallVector& b) {
    return op.neg(op.add(op.neg(b), a));
}

BallVector solve_co_right(const GyroOp& op, const BallVector& a, const BallVector& b) {
    return op.add(b, op.neg(a));
}

bool AxiomReport::all_pass() const {
    return std::all_of(identities.begin(), identities.end(),
                       [](const IdentityResult& r) { return r.pass; });
}

namespace {

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Relative residual between two ball vectors; the s term grounds the scale
// so near-zero vectors are judged on an absolute footing.
double residual(const BallVector& lhs, const BallVector& rhs) {
    const double scale = lhs.s() + std::max(lhs.norm(), rhs.norm());
    return vec::dist(lhs.coords(), rhs.coords()) / scale;
}

struct Accumulator {
    std::string name;
    double max_residual = 0.0;

    void observe(double r) { max_residual = std::max(max_residual, r); }
    void observe(const BallVector& lhs, const BallVector& rhs) { observe(residual(lhs, rhs)); }
};

} // namespace

std::string AxiomReport::to_json() const {
    std::string out = "{\"op\":\"" + op + "\",\"dim\":" + std::to_string(dim) +
                      ",\"s\":" + fmt_double(s) + ",\"seed\":" + std::to_string(seed) +
                      ",\"identities\":[";
    for (std::size_t i = 0; i < identities.size(); ++i) {
        const IdentityResult& r = identities[i];
        if (i) out += ",";
        out += "{\"name\":\"" + r.name + "\",\"samples\":" + std::to_string(r.samples) +
               ",\"max_residual\":" + fmt_double(r.max_residual) +
               ",\"pass\":" + (r.pass ? "true" : "false") + "}";
    }
    out += "]}";
    return out;
}

AxiomReport audit(const GyroOp& op, int samples, std::uint64_t seed, const Tolerance& tol) {
    if (samples < 1) {
        throw GyroError(errc::parse_error, "audit requires at least one sample");
    }
    if (tol.abs < 0.0 || tol.rel < 0.0 || (tol.abs == 0.0 && tol.rel == 0.0)) {
        throw GyroError(errc::parse_error, "tolerance must be nonnegative and not identically zero");
    }
    enum Id {
        closure,
        g1_left_identity,
        g2_left_inverse,
        g3_left_gyroassociativity,
        g4_gyration_automorphism,
        g5_left_loop,
        g6_gyrocommutativity,
        right_identity,
        right_inverse,
        left_bol,
        gyration_inversion,
        right_loop,
        nested_gyration,
        duality_coaddition,
        duality_operation,
        cancellation_left,
        cancellation_right,
        cancellation_cosub,
        cancellation_second_right,
        automorphic_inverse,
        id_count
    };
    static const char* names[id_count] = {
        "closure",
        "G1_left_identity",
        "G2_left_inverse",
        "G3_left_gyroassociativity",
        "G4_gyration_automorphism",
        "G5_left_loop",
        "G6_gyrocommutativity",
        "right_identity",
        "right_inverse",
        "left_bol",
        "gyration_inversion",
        "right_loop",
        "nested_gyration",
        "duality_coaddition",
        "duality_operation",
        "cancellation_left",
        "cancellation_right",
        "cancellation_cosub",
        "cancellation_second_right",
        "automorphic_inverse",
    };

    std::vector<Accumulator> acc(id_count);
    for (int i = 0; i < id_count; ++i) acc[static_cast<std::size_t>(i)].name = names[i];

    const BallVector& zero = op.zero;

    for (int i = 0; i < samples; ++i) {
        const std::uint64_t base = static_cast<std::uint64_t>(i) * 8;
        BallVector a = sample_ball_vector(op.params, seed, base + 0);
        const BallVector b = sample_ball_vector(op.params, seed, base + 1);
        const BallVector z = sample_ball_vector(op.params, seed, base + 2);
        const BallVector c = sample_ball_vector(op.params, seed, base + 3);
        const BallVector d = sample_ball_vector(op.params, seed, base + 4);
        if (i % 20 == 19) {
            // Near-degenerate pair a ≈ ⊖b stresses the small denominators.
            const BallVector delta = BallVector::unchecked(
                vec::scaled(sample_ball_vector(op.params, seed, base + 5).coords(), 0.01),
                op.params);
            a = op.add(op.neg(b), delta);
        }

        const BallVector ab = op.add(a, b);
        const BallVector ba = op.add(b, a);
        const BallVector na = op.neg(a);
        const BallVector nb = op.neg(b);

        acc[closure].observe(std::max(0.0, (ab.norm() - op.params.s) / op.params.s));
        acc[g1_left_identity].observe(op.add(zero, a), a);
        acc[g2_left_inverse].observe(op.add(na, a), zero);
        acc[right_identity].observe(op.add(a, zero), a);
        acc[right_inverse].observe(op.add(a, na), zero);

        // G3: a⊕(b⊕z) = (a⊕b)⊕gyr[a,b]z
        acc[g3_left_gyroassociativity].observe(op.add(a, op.add(b, z)),
                                               op.add(ab, gyr(op, a, b, z)));

        // G4: gyr[a,b](c⊕d) = gyr[a,b]c ⊕ gyr[a,b]d
        acc[g4_gyration_automorphism].observe(gyr(op, a, b, op.add(c, d)),
                                              op.add(gyr(op, a, b, c), gyr(op, a, b, d)));

        // G5: gyr[a,b] = gyr[a⊕b, b]
        acc[g5_left_loop].observe(gyr(op, a, b, z), gyr(op, ab, b, z));

        // G6: a⊕b = gyr[a,b](b⊕a)
        acc[g6_gyrocommutativity].observe(ab, gyr(op, a, b, ba));

        // x⊕(y⊕(x⊕z)) = (x⊕(y⊕x))⊕z with (x,y) = (a,b)
        acc[left_bol].observe(op.add(a, op.add(b, op.add(a, z))),
                              op.add(op.add(a, op.add(b, a)), z));

        // gyr[b,a] inverts gyr[a,b]
        acc[gyration_inversion].observe(gyr(op, b, a, gyr(op, a, b, z)), z);

        // gyr[a,b] = gyr[a, b⊕a]
        acc[right_loop].observe(gyr(op, a, b, z), gyr(op, a, ba, z));

        // gyr[a,b] = gyr[⊖gyr[a,b]b, a]
        acc[nested_gyration].observe(gyr(op, a, b, z),
                                     gyr(op, op.neg(gyr(op, a, b, b)), a, z));

        // a⊞b = a⊕gyr[a,⊖b]b, cross-checked against the closed form if any
        const BallVector co = coadd(op, a, b);
        if (op.coadd_closed) acc[duality_coaddition].observe(co, op.coadd_closed(a, b));

        // a⊕b = a⊞gyr[a,b]b
        acc[duality_operation].observe(ab, coadd(op, a, gyr(op, a, b, b)));

        acc[cancellation_left].observe(op.add(a, op.add(na, b)), b);
        acc[cancellation_right].observe(op.add(cosub(op, b, a), a), b);
        acc[cancellation_cosub].observe(cosub(op, a, op.add(nb, a)), b);
        acc[cancellation_second_right].observe(coadd(op, op.add(b, na), a), b);

        // ⊖(a⊕b) = ⊖a⊖b
        acc[automorphic_inverse].observe(op.neg(ab), op.add(na, nb));
    }

    AxiomReport report{op.label, op.params.dim, op.params.s, seed, {}};
    for (const Accumulator& a : acc) {
        report.identities.push_back(
            IdentityResult{a.name, samples, a.max_residual, a.max_residual <= tol.rel});
    }
    return report;
}

} // namespace gyro
