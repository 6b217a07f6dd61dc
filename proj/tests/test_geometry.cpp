#include "doctest.h"
#include "png/geometry.hpp"

#include <cmath>
#include <random>

using namespace png;

namespace {

ModelParams params_of(double alpha, double gm, double gp, bool modified = false) {
    ModelParams p;
    p.alpha = alpha;
    p.gamma_minus = gm;
    p.gamma_plus = gp;
    p.modified = modified;
    return p;
}

} // namespace

TEST_CASE("bulk shape value at the origin") {
    ModelParams p = params_of(0.32, 0.63, 0.79);
    CHECK(bulk_shape(0.0, p) == doctest::Approx(2.0 * 0.32 / (1.0 - 0.32)).epsilon(1e-14));
}

TEST_CASE("gamma = 1 collapses both critical points to zero") {
    ModelParams p = params_of(0.32, 1.0, 1.0, true);
    CriticalPoints cp = critical_points(p);
    CHECK(cp.beta_minus == doctest::Approx(0.0));
    CHECK(cp.beta_plus == doctest::Approx(0.0));
}

TEST_CASE("shape continuity at beta_minus and beta_plus") {
    ModelParams p = params_of(0.32, 0.63, 0.79);
    CriticalPoints cp = critical_points(p);
    CHECK(std::fabs(edge_shape_minus(cp.beta_minus, p.gamma_minus, p)
                    - bulk_shape(cp.beta_minus, p)) < 1e-10);
    CHECK(std::fabs(edge_shape_plus(cp.beta_plus, p.gamma_plus, p)
                    - bulk_shape(cp.beta_plus, p)) < 1e-10);
}

TEST_CASE("beta ordering equivalence with the gamma product") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ua(0.1, 0.7);
    for (int it = 0; it < 200; ++it) {
        double alpha = ua(rng);
        std::uniform_real_distribution<double> ug(alpha + 0.01, 1.0 / alpha - 0.01);
        double gm = ug(rng), gp = ug(rng);
        ModelParams p = params_of(alpha, gm, gp, true);
        CriticalPoints cp = critical_points(p);
        CHECK(((cp.beta_minus < cp.beta_plus) == (gm * gp < 1.0)));
    }
}

TEST_CASE("gamma product one makes beta_minus equal beta_plus") {
    for (double alpha : {0.2, 0.32, 0.5}) {
        for (double gm : {0.7, 1.0, 1.3}) {
            double gp = 1.0 / gm;
            if (gp <= alpha || gp >= 1.0 / alpha || gm <= alpha || gm >= 1.0 / alpha)
                continue;
            ModelParams p = params_of(alpha, gm, gp, true);
            CriticalPoints cp = critical_points(p);
            CHECK(std::fabs(cp.beta_minus - cp.beta_plus) < 1e-12);
        }
    }
}

TEST_CASE("symmetric supercritical sources give beta_c = 0") {
    ModelParams p = params_of(0.32, 1.26, 1.26, true);
    CriticalPoints cp = critical_points(p);
    REQUIRE(cp.beta_c.has_value());
    CHECK(std::fabs(*cp.beta_c) < 1e-12);
}

TEST_CASE("tangency at the critical product: value and slope match") {
    double alpha = 0.32, gm = 1.3, gp = 1.0 / gm;
    ModelParams p = params_of(alpha, gm, gp, true);
    CriticalPoints cp = critical_points(p);
    double b0 = cp.beta_minus;
    CHECK(std::fabs(edge_shape_minus(b0, gm, p) - bulk_shape(b0, p)) < 1e-10);
    double h = 1e-6;
    double slope_bulk = (bulk_shape(b0 + h, p) - bulk_shape(b0 - h, p)) / (2.0 * h);
    double slope_edge =
        (edge_shape_minus(b0 + h, gm, p) - edge_shape_minus(b0 - h, gm, p)) / (2.0 * h);
    CHECK(std::fabs(slope_bulk - slope_edge) < 1e-8);
}

TEST_CASE("scaling constants at beta = 0") {
    double alpha = 0.32;
    ModelParams p = params_of(alpha, 0.63, 0.79);
    ScalingFrame f = make_frame(1000, 0.0, p);
    CHECK(f.p_c == doctest::Approx(1.0).epsilon(1e-14));
    // simplified d(0) against the unsimplified formula
    double d0 = std::pow(alpha, 1.0 / 3.0) * std::pow(1.0 + alpha, 4.0 / 3.0)
                / (1.0 - alpha * alpha);
    CHECK(f.d == doctest::Approx(d0).epsilon(1e-12));
}

TEST_CASE("d_G positive and finite across the admissible range") {
    double alpha = 0.32;
    for (double g = alpha + 0.05; g < 1.0 / alpha; g += 0.1) {
        double v = d_g_coeff(g, alpha);
        CHECK(v > 0.0);
        CHECK(std::isfinite(v));
    }
    CHECK_THROWS_AS(d_g_coeff(alpha, alpha), std::domain_error);
}

TEST_CASE("scaled-height centering and tau round trip") {
    ModelParams p = params_of(0.32, 0.63, 0.79);
    ScalingFrame f = make_frame(500, 0.1, p);
    long r0 = r_of_tau(0.0, f);
    double tau0 = tau_of_r(r0, f);
    double beta_sh = f.beta0 + f.c * tau0 / std::cbrt(500.0);
    long h = std::lround(bulk_shape(beta_sh, p) * 500.0);
    double scaled = to_scaled(h, r0, f, ScaledVariant::Bulk);
    CHECK(std::fabs(scaled) < 1.0 / (f.d * std::cbrt(500.0)));

    double n23 = std::pow(500.0, 2.0 / 3.0);
    for (double tau : {-1.0, -0.3, 0.4, 1.7}) {
        double residual;
        long r = r_of_tau(tau, f, &residual);
        CHECK(std::fabs(residual) <= 0.5 / (2.0 * f.c * n23) + 1e-15);
        CHECK(tau_of_r(r, f) == doctest::Approx(tau + residual));
    }
}

TEST_CASE("limit shape rejects |beta| >= 1") {
    ModelParams p = params_of(0.32, 0.63, 0.79);
    CHECK_THROWS_AS(limit_shape(1.0, p), std::domain_error);
    CHECK_THROWS_AS(limit_shape(-1.2, p), std::domain_error);
}

TEST_CASE("critical_gamma inverts beta_minus") {
    double alpha = 0.32;
    CHECK(critical_gamma(0.0, alpha) == doctest::Approx(1.0).epsilon(1e-12));
    for (double beta0 : {-0.5, -0.2, 0.1, 0.4}) {
        double g = critical_gamma(beta0, alpha);
        ModelParams p = params_of(alpha, g, alpha, true);
        CHECK(std::fabs(critical_points(p).beta_minus - beta0) < 1e-10);
    }
    double prev = critical_gamma(-0.6, alpha);
    for (double b = -0.5; b <= 0.6; b += 0.1) {
        double g = critical_gamma(b, alpha);
        CHECK(g > prev);
        prev = g;
    }
}

TEST_CASE("limit shape branch selection across the three regimes") {
    ModelParams p1 = params_of(0.32, 0.63, 0.79);
    char tag;
    limit_shape(-0.9, p1, &tag);
    CHECK(tag == '-');
    limit_shape(0.0, p1, &tag);
    CHECK(tag == 'A');
    limit_shape(0.9, p1, &tag);
    CHECK(tag == '+');

    ModelParams p2 = params_of(0.32, 1.26, 1.58, true);
    CriticalPoints cp = critical_points(p2);
    REQUIRE(cp.beta_c.has_value());
    double vc_l = edge_shape_minus(*cp.beta_c, p2.gamma_minus, p2);
    double vc_r = edge_shape_plus(*cp.beta_c, p2.gamma_plus, p2);
    CHECK(vc_l == doctest::Approx(vc_r).epsilon(1e-12));
    limit_shape(*cp.beta_c - 0.05, p2, &tag);
    CHECK(tag == '-');
    limit_shape(*cp.beta_c + 0.05, p2, &tag);
    CHECK(tag == '+');
}
