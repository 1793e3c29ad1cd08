#include "gyro/geometry.hpp"

#include <cassert>
#include <cmath>
#include <limits>

#include "gyro/einstein.hpp"
#include "gyro/mobius.hpp"

namespace gyro {

BallVector model_add(Model m, const BallVector& u, const BallVector& v) {
    return m == Model::mobius ? mob_add_ball(u, v) : ein_add(u, v);
}

BallVector model_coadd(Model m, const BallVector& u, const BallVector& v) {
    return m == Model::mobius ? mob_coadd(u, v) : ein_coadd(u, v);
}

double model_gamma_of_sum(Model m, const BallVector& u, const BallVector& v) {
    return m == Model::mobius ? mob_gamma_of_sum(u, v) : ein_gamma_of_sum(u, v);
}

std::string model_name(Model m) { return m == Model::mobius ? "mobius" : "einstein"; }

Model model_from_name(const std::string& name) {
    if (name == "mobius") return Model::mobius;
    if (name == "einstein") return Model::einstein;
    throw ParseError("unknown model '" + name + "' (expected mobius or einstein)");
}

namespace {

BallVector model_cosub(Model m, const BallVector& a, const BallVector& b) {
    return model_coadd(m, a, b.negated());
}

} // namespace

GyroCurve make_curve(CurveKind kind, const BallVector& A, const BallVector& B, Model model) {
    require_same_params(A, B);
    if (vec::dist(A.coords(), B.coords()) == 0.0) {
        throw DegenerateCurve("curve endpoints coincide");
    }
    return GyroCurve{kind, A, B, model};
}

BallVector gyroline_point(const BallVector& A, const BallVector& B, double t, Model m) {
    require_same_params(A, B);
    return model_add(m, A, scalar_mul(t, model_add(m, A.negated(), B)));
}

BallVector cogyroline_point(const BallVector& A, const BallVector& B, double t, Model m) {
    require_same_params(A, B);
    return model_add(m, scalar_mul(t, model_cosub(m, B, A)), A);
}

BallVector curve_point(const GyroCurve& curve, double t) {
    return curve.kind == CurveKind::gyroline
               ? gyroline_point(curve.A, curve.B, t, curve.model)
               : cogyroline_point(curve.A, curve.B, t, curve.model);
}

BallVector gyromidpoint(const BallVector& A, const BallVector& B, Model m) {
    const BallVector mid = gyroline_point(A, B, 0.5, m);
    assert((Tolerance{1e-9, 1e-7}.close(mid.coords(),
                                        scalar_mul(0.5, model_coadd(m, A, B)).coords())));
    return mid;
}

BallVector cogyromidpoint(const BallVector& A, const BallVector& B, Model m) {
    // The t = 1/2 point of the cogyroline is the unique point with equal
    // cogyrodistance to A and B and is symmetric in A and B. The tempting
    // closed form (1/2) ⊗ (A ⊕ B) has neither property for generic pairs
    // (it only matches when A, B and the origin are cogyrocollinear), so the
    // defining curve-point form is authoritative here.
    return cogyroline_point(A, B, 0.5, m);
}

double gyrodistance(const BallVector& A, const BallVector& B, Model m) {
    return model_add(m, A.negated(), B).norm();
}

double cogyrodistance(const BallVector& A, const BallVector& B, Model m) {
    return model_coadd(m, A.negated(), B).norm();
}

double scalar_gyroadd(double x, double y, double s) { return (x + y) / (1.0 + x * y / (s * s)); }

namespace {

// A, B, C are gyrocollinear iff the gyrovectors ⊖A⊕B and ⊖A⊕C are parallel
// (gyrolines through A are parametrized by the direction of ⊖A⊕B).
bool gyrocollinear(const BallVector& A, const BallVector& B, const BallVector& C, Model m,
                   double angular_tol = 1e-8) {
    const vec::Vec p = model_add(m, A.negated(), B).coords();
    const vec::Vec q = model_add(m, A.negated(), C).coords();
    const double np = vec::norm(p);
    const double nq = vec::norm(q);
    if (np == 0.0 || nq == 0.0) return true; // coincident points
    // sin of the angle between p and q
    const double c = vec::dot(p, q) / (np * nq);
    const vec::Vec rej = vec::axpby(1.0 / np, p, -c / nq, q);
    return vec::norm(rej) <= angular_tol;
}

} // namespace

GyroTriangle gyrotriangle(const BallVector& A, const BallVector& B, const BallVector& C, Model m) {
    require_same_params(A, B);
    require_same_params(A, C);
    if (gyrocollinear(A, B, C, m)) {
        throw DegenerateTriangle("vertices are gyrocollinear");
    }
    GyroTriangle t{A, B, C,
                   model_add(m, C.negated(), B),
                   model_add(m, C.negated(), A),
                   model_add(m, B.negated(), A)};
    t.a = t.side_a.norm();
    t.b = t.side_b.norm();
    t.c = t.side_c.norm();
    return t;
}

bool gyrovector_equivalent(const BallVector& A, const BallVector& B, const BallVector& A2,
                           const BallVector& B2, Model m, double tol) {
    const BallVector g1 = model_add(m, A.negated(), B);
    const BallVector g2 = model_add(m, A2.negated(), B2);
    return vec::dist(g1.coords(), g2.coords()) <= tol;
}

BallVector gyroparallelogram_fourth(const BallVector& A, const BallVector& B, const BallVector& C,
                                    Model m) {
    if (gyrocollinear(A, B, C, m)) {
        throw DegenerateTriangle("gyroparallelogram vertices are gyrocollinear");
    }
    return model_add(m, model_coadd(m, B, C), A.negated());
}

namespace {

struct LineFit {
    std::array<double, 2> point;     // centroid
    std::array<double, 2> direction; // unit
    double max_deviation = 0.0;
};

LineFit fit_line(const std::vector<std::array<double, 2>>& pts) {
    double cx = 0.0, cy = 0.0;
    for (const auto& p : pts) {
        cx += p[0];
        cy += p[1];
    }
    cx /= static_cast<double>(pts.size());
    cy /= static_cast<double>(pts.size());

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& p : pts) {
        const double dx = p[0] - cx;
        const double dy = p[1] - cy;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    // dominant eigenvector of the 2x2 covariance
    const double tr = sxx + syy;
    const double det = sxx * syy - sxy * sxy;
    const double lam = 0.5 * tr + std::sqrt(std::max(0.0, 0.25 * tr * tr - det));
    double dx = sxy, dy = lam - sxx;
    if (std::abs(sxy) < 1e-300) {
        dx = sxx >= syy ? 1.0 : 0.0;
        dy = sxx >= syy ? 0.0 : 1.0;
    }
    const double n = std::hypot(dx, dy);
    LineFit fit{{cx, cy}, {dx / n, dy / n}, 0.0};
    for (const auto& p : pts) {
        const double ox = p[0] - cx;
        const double oy = p[1] - cy;
        const double perp = std::abs(ox * fit.direction[1] - oy * fit.direction[0]);
        fit.max_deviation = std::max(fit.max_deviation, perp);
    }
    return fit;
}

// Solves the 3x3 normal equations of the algebraic circle fit
//   2c·x + m = ‖x‖²,  m = r² − ‖c‖².
// Returns false when the system is numerically singular (collinear data).
bool kasa_fit(const std::vector<std::array<double, 2>>& pts, std::array<double, 2>& center,
              double& m_out) {
    double a[3][4] = {};
    for (const auto& p : pts) {
        const double row[3] = {p[0], p[1], 1.0};
        const double rhs = p[0] * p[0] + p[1] * p[1];
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) a[i][j] += row[i] * row[j];
            a[i][3] += row[i] * rhs;
        }
    }
    // Gaussian elimination with partial pivoting
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        }
        if (std::abs(a[piv][col]) < 1e-13 * static_cast<double>(pts.size())) return false;
        for (int j = 0; j < 4; ++j) std::swap(a[col][j], a[piv][j]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            for (int j = col; j < 4; ++j) a[r][j] -= f * a[col][j];
        }
    }
    const double b0 = a[0][3] / a[0][0];
    const double b1 = a[1][3] / a[1][1];
    const double b2 = a[2][3] / a[2][2];
    center = {0.5 * b0, 0.5 * b1};
    m_out = b2;
    return true;
}

ArcDiagnostics line_diagnostics(const LineFit& fit, double s) {
    ArcDiagnostics d;
    d.is_line = true;
    d.radius = std::numeric_limits<double>::infinity();
    d.center = {0.0, 0.0};
    // distance from the origin to the supporting line
    const double dist0 = std::abs(fit.point[0] * fit.direction[1] - fit.point[1] * fit.direction[0]);
    d.orthogonality_residual = dist0 * dist0;
    d.diametric_residual = 2.0 * dist0; // ‖P1 + P2‖ for a chord at that distance
    d.boundary_angle = std::acos(std::min(1.0, dist0 / s));
    return d;
}

} // namespace

ArcDiagnostics arc_diagnostics(const GyroCurve& curve, int samples) {
    if (curve.A.dim() != 2) {
        throw DimensionUnsupported("arc diagnostics require dimension 2");
    }
    if (curve.model != Model::mobius) {
        throw DimensionUnsupported("arc diagnostics are defined for the mobius model");
    }
    if (samples < 3) {
        throw DegenerateFit("circle fit requires at least 3 samples");
    }

    const double s = curve.A.s();
    std::vector<std::array<double, 2>> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(samples - 1);
        const vec::Vec p = curve_point(curve, t).coords();
        pts.push_back({p[0], p[1]});
    }

    const LineFit line = fit_line(pts);
    if (line.max_deviation < 1e-9 * s) {
        return line_diagnostics(line, s);
    }

    std::array<double, 2> center{};
    double m = 0.0;
    if (!kasa_fit(pts, center, m)) {
        return line_diagnostics(line, s);
    }
    const double c2 = center[0] * center[0] + center[1] * center[1];
    const double r = std::sqrt(std::max(0.0, c2 + m));
    if (!(r < 1e8 * s)) {
        return line_diagnostics(line, s);
    }

    ArcDiagnostics d;
    d.center = center;
    d.radius = r;
    const double q = -m; // power of the origin; avoids forming c2 − r² at large radii
    d.orthogonality_residual = std::abs(q - s * s);
    d.diametric_residual = std::abs(q + s * s) / std::max(std::sqrt(c2), 1e-300);
    const double cosang = (s * s + r * r - c2) / (2.0 * s * r);
    d.boundary_angle = std::acos(std::clamp(cosang, -1.0, 1.0));
    return d;
}

} // namespace gyro
