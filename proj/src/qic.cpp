#include "gyro/qic.hpp"

#include <cassert>
#include <cmath>

#include "gyro/einstein.hpp"
#include "gyro/mobius.hpp"

namespace gyro {
namespace {

using C = std::complex<double>;
using Mat2 = std::array<C, 4>;

Mat2 mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

// Principal square root of a Hermitian positive semidefinite 2×2 matrix via
// eigendecomposition. For [[p, conj(b)], [b, q]] the eigenpairs are
// λ± = m ± √(m² − det) with eigenvectors (conj(b), λ − p) and its orthogonal
// complement; b = 0 degenerates to the diagonal case.
Mat2 sqrt_hermitian(const Mat2& h) {
    const double p = h[0].real();
    const double q = h[3].real();
    const C b = h[2];
    if (std::norm(b) == 0.0) {
        return {C(std::sqrt(std::max(0.0, p)), 0.0), C(0.0, 0.0), C(0.0, 0.0),
                C(std::sqrt(std::max(0.0, q)), 0.0)};
    }
    const double mean = 0.5 * (p + q);
    const double disc = std::sqrt(std::max(0.0, 0.25 * (p - q) * (p - q) + std::norm(b)));
    const double l1 = mean + disc;
    const double l2 = std::max(0.0, mean - disc);
    const double r1 = std::sqrt(l1);
    const double r2 = std::sqrt(l2);

    // v1 = (conj(b), l1 − p), v2 = (−(l1 − p), b); same norm, orthogonal.
    const C v1a = std::conj(b);
    const double v1b = l1 - p;
    const double nn = std::norm(v1a) + v1b * v1b;
    Mat2 out;
    out[0] = (r1 * std::norm(v1a) + r2 * v1b * v1b) / nn;
    out[1] = (r1 - r2) * v1a * v1b / nn;
    out[2] = std::conj(out[1]);
    out[3] = (r1 * v1b * v1b + r2 * std::norm(v1a)) / nn;
    return out;
}

void require_bloch(const BallVector& v) {
    if (v.dim() != 3 || v.s() != 1.0) {
        throw DimensionUnsupported("Bloch vectors live in the unit ball of dimension 3");
    }
}

} // namespace

QubitDensity density_from_bloch(const BallVector& v) {
    require_bloch(v);
    const auto& c = v.coords();
    return QubitDensity{{C(0.5 * (1.0 + c[2]), 0.0), 0.5 * C(c[0], -c[1]),
                         0.5 * C(c[0], c[1]), C(0.5 * (1.0 - c[2]), 0.0)}};
}

BallVector bloch_from_density(const QubitDensity& rho) {
    return make_ball_vector({2.0 * rho.entries[2].real(), 2.0 * rho.entries[2].imag(),
                             rho.entries[0].real() - rho.entries[3].real()},
                            BallParams(1.0, 3));
}

BallVector two_sum_bloch(const BallVector& u, const BallVector& v) {
    require_bloch(u);
    require_same_params(u, v);
    const BallVector w = scalar_mul(2.0, mob_add_ball(u, v));
    assert((Tolerance{1e-9, 1e-7}.close(
        w.coords(), mob_add_ball(u, mob_add_ball(scalar_mul(2.0, v), u)).coords())));
    return w;
}

double bures_fidelity(const BallVector& u, const BallVector& v, FidelityMethod method) {
    require_bloch(u);
    require_same_params(u, v);
    if (method == FidelityMethod::gyro) {
        return 0.5 * (1.0 + ein_gamma_of_sum(u, v)) / (gamma(u) * gamma(v));
    }
    const QubitDensity ru = density_from_bloch(u);
    const QubitDensity rv = density_from_bloch(v);
    const Mat2 root_u = sqrt_hermitian(ru.entries);
    const Mat2 inner = mul(mul(root_u, rv.entries), root_u);
    const Mat2 root_inner = sqrt_hermitian(inner);
    const double tr = (root_inner[0] + root_inner[3]).real();
    return tr * tr;
}

} // namespace gyro
