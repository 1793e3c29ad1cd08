#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace gyro::vec {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline double norm_sq(const Vec& a) { return dot(a, a); }

inline double norm(const Vec& a) { return std::sqrt(norm_sq(a)); }

inline Vec add(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline Vec scaled(const Vec& a, double k) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = k * a[i];
    return out;
}

// a*x + b*y
inline Vec axpby(double a, const Vec& x, double b, const Vec& y) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
    return out;
}

inline double dist(const Vec& a, const Vec& b) { return norm(sub(a, b)); }

} // namespace gyro::vec
