#pragma once

// Minimal double-double arithmetic (error-free transformations, ~106-bit
// mantissa). The ball additions evaluate coefficients like 1 + 2u·v/s² that
// cancel catastrophically when composed points approach the boundary; the
// identity audits need those coefficients to full precision relative to their
// tiny values, which plain doubles cannot deliver.

#include <cmath>
#include <vector>

namespace gyro::dd {

struct DD {
    double hi = 0.0;
    double lo = 0.0;
};

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

// requires |a| >= |b| or a == 0
inline DD fast_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD add(const DD& a, const DD& b) {
    const DD s = two_sum(a.hi, b.hi);
    return fast_two_sum(s.hi, s.lo + a.lo + b.lo);
}

inline DD add(const DD& a, double b) {
    const DD s = two_sum(a.hi, b);
    return fast_two_sum(s.hi, s.lo + a.lo);
}

inline DD mul(const DD& a, const DD& b) {
    const DD p = two_prod(a.hi, b.hi);
    return fast_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

inline DD mul(const DD& a, double b) {
    const DD p = two_prod(a.hi, b);
    return fast_two_sum(p.hi, p.lo + a.lo * b);
}

inline DD div(const DD& a, const DD& b) {
    const double q1 = a.hi / b.hi;
    const DD r1 = add(a, mul(b, -q1));
    const double q2 = r1.hi / b.hi;
    const DD r2 = add(r1, mul(b, -q2));
    const double q3 = r2.hi / b.hi;
    return add(fast_two_sum(q1, q2), q3);
}

// compensated dot product (Ogita-Rump-Oishi style)
inline DD dot2(const std::vector<double>& x, const std::vector<double>& y) {
    DD acc{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) acc = add(acc, two_prod(x[i], y[i]));
    return acc;
}

} // namespace gyro::dd
