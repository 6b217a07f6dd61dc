#include "png/special_functions.hpp"
#include "png/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace png {

namespace {

// Panel-marched Gauss quadrature over [0, hi] with widths shrunk where the
// integrand oscillates (freq = local phase derivative of the Airy factor).
double march_panels(const std::function<double(double)>& f, double hi,
                    const std::function<double(double)>& freq) {
    double acc = 0.0, lo = 0.0;
    std::vector<double> x, w;
    while (lo < hi) {
        double width = std::min(2.0, 12.0 / std::max(1.0, freq(lo)));
        double up = std::min(hi, lo + width);
        gauss_on_interval(24, lo, up, x, w);
        for (size_t i = 0; i < x.size(); ++i) acc += w[i] * f(x[i]);
        lo = up;
    }
    return acc;
}

// log of a crude bound for |e^{-c lam} Ai(x + lam)|
double log_bound(double x, double c, double lam) {
    double v = x + lam;
    double decay = v > 1.0 ? -(2.0 / 3.0) * v * std::sqrt(v) : 0.0;
    return -c * lam + decay;
}

// Direct quadrature of the omega > 0 branch int_0^inf e^{-w lam} Ai(x - lam).
double b_branch_pos(double x, double omega) {
    double hi = std::max(x, 0.0) + 50.0 / omega + 8.0;
    hi = std::min(hi, 4000.0);
    return march_panels(
        [&](double lam) { return std::exp(-omega * lam) * airy_ai(x - lam); }, hi,
        [&](double lam) { return std::sqrt(std::max(1.0, lam - x)); });
}

} // namespace

double airy_exp_integral(double x, double c) {
    if (!std::isfinite(x) || !std::isfinite(c))
        throw std::domain_error("airy_exp_integral: non-finite argument");

    // Cutoff where superexponential Airy decay has buried the peak.
    double peak = log_bound(x, c, 0.0);
    double cutoff = 4.0;
    for (double lam = 1.0; lam <= 900.0; lam += 1.0) {
        double lb = log_bound(x, c, lam);
        peak = std::max(peak, lb);
        cutoff = lam;
        if (lb < peak - 46.0 && lam > -x + 2.0) break;
    }
    return march_panels(
        [&](double lam) { return std::exp(-c * lam) * airy_ai(x + lam); }, cutoff,
        [&](double lam) { return std::sqrt(std::max(1.0, -(x + lam))); });
}

double airy_cdf_integral(double x) {
    return 1.0 - airy_exp_integral(x, 0.0);
}

double b_transition(double x, double omega) {
    if (!std::isfinite(x) || !std::isfinite(omega))
        throw std::domain_error("b_transition: non-finite argument");
    double expo = omega * omega * omega / 3.0 - x * omega;
    // The literal difference loses ~e^{expo} * eps absolutely; fall back to
    // the branch integral where that would spoil the 1e-9 contract.
    if (omega > 0.25 && expo > 9.0) return b_branch_pos(x, omega);
    return std::exp(expo) - airy_exp_integral(x, -omega);
}

} // namespace png
