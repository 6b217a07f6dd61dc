#pragma once

#include <cmath>

namespace png::detail {

// Minimal double-double arithmetic (Dekker/Knuth error-free transforms).
// Used only where a plain double accumulation loses digits to cancellation,
// e.g. the Airy Maclaurin series at moderate |x|.
struct dd {
    double hi = 0.0;
    double lo = 0.0;
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd add(dd a, double b) {
    dd s = two_sum(a.hi, b);
    s.lo += a.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd mul(dd a, double b) {
    dd p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline dd div(dd a, double b) {
    double q1 = a.hi / b;
    dd p = two_prod(q1, b);
    double r = ((a.hi - p.hi) - p.lo) + a.lo;
    return quick_two_sum(q1, r / b);
}

inline dd from(double x) { return {x, 0.0}; }

} // namespace png::detail
