#pragma once

#include "png/airy.hpp"

namespace png {

// Phi(x, c) = int_0^inf e^{-c lambda} Ai(x + lambda) dlambda.
// Converges for every real c; absolute error <= 1e-10 at desk scale.
double airy_exp_integral(double x, double c);

// Cumulative Airy integral int_{-inf}^x Ai(t) dt = 1 - Phi(x, 0).
double airy_cdf_integral(double x);

// B(x, omega) via the analytic form e^{omega^3/3 - x omega} - Phi(x, -omega).
// Agrees with both printed branch definitions (tested).
double b_transition(double x, double omega);

} // namespace png
