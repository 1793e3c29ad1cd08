#pragma once

#include <array>
#include <string>

#include "gyro/ball.hpp"

namespace gyro {

enum class Model { mobius, einstein };

/// Model-dispatched primitives shared by the geometry functions and the CLI.
BallVector model_add(Model m, const BallVector& u, const BallVector& v);
BallVector model_coadd(Model m, const BallVector& u, const BallVector& v);
double model_gamma_of_sum(Model m, const BallVector& u, const BallVector& v);

std::string model_name(Model m);
Model model_from_name(const std::string& name); // throws ParseError

enum class CurveKind { gyroline, cogyroline };

/// A gyroline or cogyroline through two distinct points of the ball.
struct GyroCurve {
    CurveKind kind;
    BallVector A;
    BallVector B;
    Model model;
};

/// Throws DegenerateCurve when A = B.
GyroCurve make_curve(CurveKind kind, const BallVector& A, const BallVector& B, Model model);

/// P(t) = A ⊕ (⊖A ⊕ B) ⊗ t; P(0) = A, P(1) = B.
BallVector gyroline_point(const BallVector& A, const BallVector& B, double t, Model m);

/// P(t) = (B ⊟ A) ⊗ t ⊕ A; P(0) = A, P(1) = B.
BallVector cogyroline_point(const BallVector& A, const BallVector& B, double t, Model m);

BallVector curve_point(const GyroCurve& curve, double t);

/// A ⊕ (⊖A⊕B) ⊗ ½; coincides with ½ ⊗ (A ⊞ B) and is equidistant from A
/// and B in the gyrodistance.
BallVector gyromidpoint(const BallVector& A, const BallVector& B, Model m);

/// (B ⊟ A) ⊗ ½ ⊕ A; the unique point co-equidistant from A and B, and
/// symmetric in them. Reduces to ½ ⊗ (A ⊕ B) when A, B are collinear with
/// the origin (trivial gyrations), but not in general.
BallVector cogyromidpoint(const BallVector& A, const BallVector& B, Model m);

/// d(A,B) = ‖⊖A ⊕ B‖ and its cooperation counterpart dᶜ(A,B) = ‖⊖A ⊞ B‖.
double gyrodistance(const BallVector& A, const BallVector& B, Model m);
double cogyrodistance(const BallVector& A, const BallVector& B, Model m);

/// Scalar gyroaddition of nonnegative lengths, (x + y)/(1 + xy/s²); the
/// right-hand side of the gyrotriangle inequality.
double scalar_gyroadd(double x, double y, double s);

struct GyroTriangle {
    BallVector A, B, C;
    BallVector side_a, side_b, side_c; // ⊖C⊕B, ⊖C⊕A, ⊖B⊕A
    double a = 0.0, b = 0.0, c = 0.0;
};

/// Throws DegenerateTriangle when the three points are gyrocollinear.
GyroTriangle gyrotriangle(const BallVector& A, const BallVector& B, const BallVector& C, Model m);

/// Two directed gyrosegments are equivalent iff their gyrovectors coincide:
/// ‖(⊖A⊕B) − (⊖A2⊕B2)‖ ≤ tol.
bool gyrovector_equivalent(const BallVector& A, const BallVector& B, const BallVector& A2,
                           const BallVector& B2, Model m, double tol);

/// Fourth gyroparallelogram vertex D = (B ⊞ C) ⊖ A; the gyrodiagonals AD and
/// BC share their gyromidpoint.
BallVector gyroparallelogram_fourth(const BallVector& A, const BallVector& B, const BallVector& C,
                                    Model m);

/// Circle diagnostics for planar Mobius curves. Gyrolines supporting circles
/// meet the boundary orthogonally (‖center‖² = radius² + s²), cogyroline
/// circles cross it at antipodal points. A curve through the origin is a
/// straight segment and is reported with the line flag set.
struct ArcDiagnostics {
    bool is_line = false;
    std::array<double, 2> center{0.0, 0.0};
    double radius = 0.0; // infinity when is_line
    double boundary_angle = 0.0;
    double orthogonality_residual = 0.0; // |‖center‖² − radius² − s²|
    double diametric_residual = 0.0;     // ‖P1 + P2‖ over boundary crossings
};

/// Least-squares circle fit over `samples` points of the curve at uniform
/// t ∈ [0, 1]. Requires dim = 2 and the Mobius model.
ArcDiagnostics arc_diagnostics(const GyroCurve& curve, int samples);

} // namespace gyro
