#pragma once

#include <stdexcept>

namespace png {

struct AiryValue {
    double x = 0.0;
    double ai = 0.0;
    double ai_prime = 0.0;
};

// Airy function of the first kind and its derivative.
// Absolute error <= 1e-12 on [-20, 20], relative error <= 1e-8 outside.
// Throws std::domain_error on non-finite input.
double airy_ai(double x);
double airy_ai_prime(double x);
AiryValue airy(double x);

namespace detail {
// Maclaurin evaluation in double-double, usable for |x| <= ~11.
// Exposed for the overlap tests against the asymptotic branches.
AiryValue airy_series(double x);
AiryValue airy_asymptotic_pos(double x); // x >= 6
AiryValue airy_asymptotic_neg(double x); // x <= -6
} // namespace detail

} // namespace png
