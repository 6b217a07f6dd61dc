#include "doctest.h"
#include "png/quadrature.hpp"
#include "png/special_functions.hpp"

#include <cmath>

using namespace png;

namespace {

// int_{-inf}^{y} Ai dt for y << -1 by repeated integration by parts of
// Ai = Ai''/t (exact identity, error O(|y|^{-21/4})).
double lower_tail(double y) {
    double ai = airy_ai(y), aip = airy_ai_prime(y);
    return aip / y + ai / (y * y) + 2.0 * aip / (y * y * y * y);
}

} // namespace

TEST_CASE("Ai normalization: total integral is 1") {
    double total = airy_exp_integral(-40.0, 0.0) + lower_tail(-40.0);
    CHECK(std::fabs(total - 1.0) < 1e-6);
}

TEST_CASE("Phi(-10, 0) complements the lower tail") {
    double upper = airy_exp_integral(-10.0, 0.0);
    CHECK(std::fabs(upper + airy_cdf_integral(-10.0) - 1.0) < 1e-12);
    // independent fine-step Simpson over the support of the integrand
    double acc = 0.0;
    const double h = 5e-4;
    for (double lam = 0.0; lam < 32.0; lam += 2.0 * h) {
        double f0 = airy_ai(-10.0 + lam);
        double f1 = airy_ai(-10.0 + lam + h);
        double f2 = airy_ai(-10.0 + lam + 2.0 * h);
        acc += h / 3.0 * (f0 + 4.0 * f1 + f2);
    }
    CHECK(std::fabs(upper - acc) < 1e-9);
}

TEST_CASE("Phi(8, 0) upper-tail bound") {
    double v = airy_exp_integral(8.0, 0.0);
    CHECK(v > 0.0);
    CHECK(v < 1e-6);
}

TEST_CASE("Phi(0, 1) against a second independent quadrature") {
    double v = airy_exp_integral(0.0, 1.0);
    double acc = 0.0;
    const double h = 5e-4;
    for (double lam = 0.0; lam < 30.0; lam += 2.0 * h) {
        auto f = [](double t) { return std::exp(-t) * airy_ai(t); };
        acc += h / 3.0 * (f(lam) + 4.0 * f(lam + h) + f(lam + 2.0 * h));
    }
    CHECK(std::fabs(v - acc) < 1e-9);
}

TEST_CASE("B(x, 0) is the cumulative Airy integral") {
    CHECK(std::fabs(b_transition(8.0, 0.0) - 1.0) < 1e-6);
    for (double x : {-3.0, 0.0, 2.0})
        CHECK(b_transition(x, 0.0) == doctest::Approx(airy_cdf_integral(x)).epsilon(1e-10));
}

TEST_CASE("branch consistency on the omega > 0 grid") {
    // B must match the direct branch quadrature; the literal analytic
    // difference e^{w^3/3 - xw} - Phi(x,-w) is compared up to its own
    // double-precision conditioning bound e^{w^3/3 - xw} * O(eps).
    auto branch = [](double x, double w) {
        return integrate_panels(
            [&](double lam) { return std::exp(-w * lam) * airy_ai(x - lam); },
            0.0, std::max(x, 0.0) + 60.0 / w, 600, 24);
    };
    for (double x = -5.0; x <= 5.0; x += 2.5) {
        for (double w : {0.4, 1.0, 3.0}) {
            double b = b_transition(x, w);
            CHECK(std::fabs(b - branch(x, w)) < 1e-7);
            double expo = w * w * w / 3.0 - x * w;
            double literal = std::exp(expo) - airy_exp_integral(x, -w);
            double tol = std::max(1e-7, 5e-15 * std::exp(expo));
            CHECK(std::fabs(b - literal) < tol);
        }
    }
}

TEST_CASE("bilateral Airy-Laplace identity backs the analytic rewrite") {
    // int_{-inf}^{inf} e^{w t} Ai(t) dt = e^{w^3/3}
    for (double w : {0.5, 1.0, 2.0}) {
        double v = integrate_panels(
            [&](double t) { return std::exp(w * t) * airy_ai(t); }, -60.0, 40.0, 200, 24);
        CHECK(v == doctest::Approx(std::exp(w * w * w / 3.0)).epsilon(1e-8));
    }
}

TEST_CASE("dB/dx = Ai(x) - omega B (SI1 residual)") {
    for (double x : {-2.0, 0.5, 3.0}) {
        for (double w : {-1.0, 0.3, 1.5}) {
            double h = 1e-4;
            double fd = (b_transition(x + h, w) - b_transition(x - h, w)) / (2.0 * h);
            CHECK(std::fabs(fd - (airy_ai(x) - w * b_transition(x, w))) < 1e-6);
        }
    }
}

TEST_CASE("dB/domega matches the SI2 relation at (1, -1)") {
    double x = 1.0, w = -1.0, h = 1e-4;
    double fd = (b_transition(x, w + h) - b_transition(x, w - h)) / (2.0 * h);
    double rhs = airy_ai_prime(x) - w * airy_ai(x) + (w * w - x) * b_transition(x, w);
    CHECK(std::fabs(fd - rhs) < 1e-5);
}

TEST_CASE("SI1 residual across both branches of omega") {
    for (double x = -5.0; x <= 5.0; x += 1.0) {
        for (double w = -3.0; w <= 3.0; w += 0.75) {
            double h = 1e-4;
            double b = b_transition(x, w);
            double fd = (b_transition(x + h, w) - b_transition(x - h, w)) / (2.0 * h);
            // tolerance scales with |B|: the h^2 difference error does too
            CHECK(std::fabs(fd - (airy_ai(x) - w * b)) < 2e-6 * std::max(1.0, std::fabs(b)));
        }
    }
}
