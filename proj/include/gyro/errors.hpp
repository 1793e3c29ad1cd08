#pragma once

#include <stdexcept>
#include <string>

namespace gyro {

// Error taxonomy shared by the library and the CLI exit-code mapping.
enum class errc {
    out_of_ball,
    dimension_mismatch,
    params_mismatch,
    dimension_unsupported,
    degenerate_curve,
    degenerate_triangle,
    degenerate_fit,
    parse_error,
};

class GyroError : public std::runtime_error {
public:
    GyroError(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

struct OutOfBall : GyroError {
    explicit OutOfBall(const std::string& what) : GyroError(errc::out_of_ball, what) {}
};

struct DimensionMismatch : GyroError {
    explicit DimensionMismatch(const std::string& what)
        : GyroError(errc::dimension_mismatch, what) {}
};

struct ParamsMismatch : GyroError {
    explicit ParamsMismatch(const std::string& what)
        : GyroError(errc::params_mismatch, what) {}
};

struct DimensionUnsupported : GyroError {
    explicit DimensionUnsupported(const std::string& what)
        : GyroError(errc::dimension_unsupported, what) {}
};

struct DegenerateCurve : GyroError {
    explicit DegenerateCurve(const std::string& what)
        : GyroError(errc::degenerate_curve, what) {}
};

struct DegenerateTriangle : GyroError {
    explicit DegenerateTriangle(const std::string& what)
        : GyroError(errc::degenerate_triangle, what) {}
};

struct DegenerateFit : GyroError {
    explicit DegenerateFit(const std::string& what)
        : GyroError(errc::degenerate_fit, what) {}
};

struct ParseError : GyroError {
    explicit ParseError(const std::string& what) : GyroError(errc::parse_error, what) {}
};

} // namespace gyro
