#include "doctest.h"
#include "png/fredholm.hpp"
#include "png/quadrature.hpp"
#include "png/special_functions.hpp"

#include <cmath>

using namespace png;

namespace {

const PainleveTable& table() {
    static PainleveTable t = solve_q();
    return t;
}

} // namespace

TEST_CASE("zero kernel gives det = 1") {
    QuadratureGrid g = make_grid(KernelSpec::extended_airy(), {{0.0, 0.0}});
    auto op = assemble_functor([](double, double, double, double) { return 0.0; }, g);
    CHECK(det1p(op) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("rank-one kernel determinant identity") {
    // det(1 - A x B on (s, inf)) = 1 - int_s^inf A B when A x B is rank one
    double s = -1.0;
    auto a = [](double x) { return std::exp(-x * x / 2.0); };
    auto b = [](double x) { return std::exp(-x * x / 3.0 + 0.2 * x); };
    GridOptions opts;
    opts.adapt = false;
    opts.cutoff = 16.0;
    opts.nodes = 120;
    QuadratureGrid g = make_grid(KernelSpec::extended_airy(), {{0.0, s}}, opts);
    auto op = assemble_functor(
        [&](double, double x1, double, double x2) { return a(x1) * b(x2); }, g);
    double expect =
        1.0 - integrate_panels([&](double x) { return a(x) * b(x); }, s, s + 16.0, 60, 24);
    CHECK(det1p(op) == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("node refinement is Cauchy for the one-point Airy law") {
    GridOptions g40, g80, g60;
    g40.nodes = 40;
    g80.nodes = 80;
    g40.adapt = g80.adapt = g60.adapt = false;
    double v40 = one_point_cdf(KernelSpec::extended_airy(), 0.0, 0.0, g40);
    double v80 = one_point_cdf(KernelSpec::extended_airy(), 0.0, 0.0, g80);
    CHECK(std::fabs(v40 - v80) < 1e-8);
    double v60 = one_point_cdf(KernelSpec::extended_airy(), 0.0, 0.0, g60);
    CHECK(std::fabs(v60 - v80) < 1e-8);
}

TEST_CASE("extended Airy one-point law is Tracy-Widom GUE") {
    const auto& t = table();
    for (double s : {-3.0, -1.0, 0.0, 1.5}) {
        double det = one_point_cdf(KernelSpec::extended_airy(), s);
        CHECK(std::fabs(det - t.interp(t.f2, s)) < 1e-6);
    }
    CHECK(one_point_cdf(KernelSpec::extended_airy(), 8.0) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("goe2 omega = 0 equals F1 squared") {
    const auto& t = table();
    for (double s = -6.0; s <= 3.0; s += 1.0)
        CHECK(std::fabs(one_point_cdf(KernelSpec::goe2(0.0), s) - t.interp(t.f12, s)) < 1e-5);
}

TEST_CASE("extended Airy mean matches the table value") {
    std::vector<double> s, F;
    for (double sv = -9.0; sv <= 6.0; sv += 0.05) {
        s.push_back(sv);
        F.push_back(one_point_cdf(KernelSpec::extended_airy(), sv));
    }
    Moments m = moments(s, F);
    CHECK(std::fabs(m.mean - (-1.77109)) < 2e-3);
}

TEST_CASE("joint marginalization: dropping a slot at +infinity") {
    KernelSpec spec = KernelSpec::extended_airy();
    double one = joint_cdf(spec, {{0.0, 0.2}});
    double two = joint_cdf(spec, {{0.0, 0.2}, {1.0, 30.0}});
    CHECK(std::fabs(one - two) < 1e-8);
}

TEST_CASE("joint law is symmetric under point permutation") {
    KernelSpec spec = KernelSpec::extended_airy();
    double a = joint_cdf(spec, {{0.0, 0.1}, {0.8, -0.3}});
    double b = joint_cdf(spec, {{0.8, -0.3}, {0.0, 0.1}});
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("gauge invariance of the determinant") {
    // multiplying the kernel by f(x1)/f(x2) must not change det(1 + KG)
    KernelSpec spec = KernelSpec::extended_airy();
    QuadratureGrid g = make_grid(spec, {{0.0, -0.5}, {0.7, 0.2}});
    double plain = det1p(assemble(spec, g));
    double gauged = det1p(assemble_functor(
        [&](double t1, double x1, double t2, double x2) {
            double f1 = std::exp(0.5 * x1 + 0.3 * t1), f2 = std::exp(0.5 * x2 + 0.3 * t2);
            return kernel_eval(spec, t1, x1, t2, x2) * f1 / f2;
        },
        g));
    CHECK(plain == doctest::Approx(gauged).epsilon(1e-9));
}

TEST_CASE("two-point Airy joint lies between Frechet bounds and below marginals") {
    KernelSpec spec = KernelSpec::extended_airy();
    double f1 = joint_cdf(spec, {{0.0, 0.0}});
    double f2 = joint_cdf(spec, {{0.6, 0.4}});
    double j = joint_cdf(spec, {{0.0, 0.0}, {0.6, 0.4}});
    CHECK(j <= std::min(f1, f2) + 1e-9);
    CHECK(j >= f1 + f2 - 1.0 - 1e-9);
    CHECK(j >= f1 * f2 - 1e-6); // positive association of the Airy process
}

TEST_CASE("rank_one_ab reproduces e^{-int q} at omega = 0") {
    const auto& t = table();
    for (double s : {-2.0, 0.0, 1.0}) {
        RankOneAB r = rank_one_ab(s, 0.0);
        double e = t.interp(t.e, s);
        CHECK(std::fabs(r.a - e) < 1e-5);
        CHECK(std::fabs(r.b - e) < 1e-5);
        CHECK(std::fabs(r.f2 - t.interp(t.f2, s)) < 1e-6);
    }
}

TEST_CASE("rank_one_ab large-omega asymptote") {
    PointCoeffs c = coeffs_at(table(), 0.0);
    RankOneAB r = rank_one_ab(0.0, 20.0);
    CHECK(std::fabs(r.a - (1.0 - c.u / 20.0)) < 2e-3);
}

TEST_CASE("rank_one_ab symmetry a(s,t) = b(s,-t) e^{t^3/3 - s t}") {
    double s = 1.0, tau = 0.7;
    RankOneAB fw = rank_one_ab(s, tau);
    RankOneAB bw = rank_one_ab(s, -tau);
    CHECK(std::fabs(fw.a - bw.b * std::exp(tau * tau * tau / 3.0 - s * tau)) < 1e-5);
}

TEST_CASE("route equivalence: determinant vs Painleve transition law") {
    const auto& t = table();
    for (double w : {-0.7, 0.3, 1.0}) {
        for (double s : {-3.0, 0.0, 2.0}) {
            double det = one_point_cdf(KernelSpec::goe2(w), s);
            double ode = transition_cdf(t, s, w);
            CHECK(std::fabs(det - ode) < 1e-4);
        }
    }
}

TEST_CASE("one-point goe2 at tau equals the omega-shifted law") {
    const auto& t = table();
    double det = one_point_cdf(KernelSpec::goe2(0.0), 0.4, /*tau=*/1.0);
    CHECK(std::fabs(det - transition_cdf(t, 0.4, 1.0)) < 1e-4);
    double det2 = one_point_cdf(KernelSpec::goe2(0.3), -0.5, /*tau=*/-1.0);
    CHECK(std::fabs(det2 - transition_cdf(t, -0.5, -0.7)) < 1e-4);
}

TEST_CASE("f0_point against the Painleve route") {
    const auto& t = table();
    double direct = f0_point(0.5, 0.5, 0.0);
    double pain = f0_cdf(t, 0.0, 0.5, 0.5);
    CHECK(std::fabs(direct - pain) < 2e-4);
    CHECK(f0_point(0.5, 0.5, 7.0) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("f0_point Richardson extrapolation toward the F0 law") {
    const auto& t = table();
    double f0 = f0_cdf(t, 0.0, 0.0, 0.0);
    double p1 = f0_point(0.1, 0.1, 0.0);
    double p2 = f0_point(0.05, 0.05, 0.0);
    double p3 = f0_point(0.025, 0.025, 0.0);
    double r12 = 2.0 * p2 - p1;
    double r23 = 2.0 * p3 - p2;
    CHECK(std::fabs(r23 - f0) < 5e-3);
    CHECK(std::fabs(r23 - r12) < 5e-3);
}

TEST_CASE("f0_point delegates below the divergence line") {
    const auto& t = table();
    double v = f0_point(-0.5, 0.3, 0.2, &t);
    CHECK(v == doctest::Approx(f0_cdf(t, 0.2, -0.5, 0.3)).epsilon(1e-12));
    CHECK_THROWS_AS(f0_point(-0.5, 0.3, 0.2), std::domain_error);
    CHECK_THROWS_AS(one_point_cdf(KernelSpec::f0(-0.5, 0.3), 0.2), std::domain_error);
}

TEST_CASE("Prop 5.1 identity: Fredholm scalar vs a/b combination") {
    const auto& t = table();
    for (auto [wp, wm] : std::vector<std::pair<double, double>>{{0.3, 0.7}, {1.0, 1.0}}) {
        for (double s : {-1.0, 0.5}) {
            double det = one_point_cdf(KernelSpec::f0(wp, wm), s);
            double f2 = coeffs_at(t, s).f2;
            ABPoint p = ab_point(coeffs_at(t, s), wp);
            ABPoint m = ab_point(coeffs_at(t, s), wm);
            double scalar = p.a * m.a - p.b * m.b;
            CHECK(std::fabs(det / f2 - scalar) < 1e-4);
        }
    }
}

TEST_CASE("gaussian_joint single point is a normal CDF") {
    double be = -0.74;
    for (double s : {-1.0, 0.0, 0.8}) {
        double v = gaussian_joint({{-1.2, s}}, be);
        CHECK(v == doctest::Approx(norm_cdf(s / std::sqrt(be + 1.2))).epsilon(1e-12));
    }
    double inf = std::numeric_limits<double>::infinity();
    CHECK(gaussian_joint({{-1.2, inf}, {-1.0, inf}}, be) == doctest::Approx(1.0));
}

TEST_CASE("gaussian_joint two-point equals the Brownian-spec determinant") {
    double be = -0.74;
    std::vector<std::pair<double, double>> pts{{-1.3, 0.2}, {-1.0, 0.5}};
    double chain = gaussian_joint(pts, be);
    GridOptions opts;
    opts.cutoff = 12.0;
    opts.nodes = 100;
    double det = joint_cdf(KernelSpec::brownian(be), pts, opts);
    CHECK(std::fabs(chain - det) < 1e-6);
}

TEST_CASE("gaussian_joint right edge mirrors the left edge") {
    double left = gaussian_joint({{-1.3, 0.2}, {-1.0, 0.5}}, -0.74, EdgeSide::Left);
    double right = gaussian_joint({{1.0, 0.5}, {1.3, 0.2}}, 0.74, EdgeSide::Right);
    CHECK(left == doctest::Approx(right).epsilon(1e-10));
}

TEST_CASE("gaussian_joint rejects unordered betas") {
    CHECK_THROWS_AS(gaussian_joint({{-1.0, 0.1}, {-1.3, 0.2}}, -0.74), std::domain_error);
}

TEST_CASE("beta_c product law") {
    ModelParams p;
    p.alpha = 0.32;
    p.gamma_minus = 1.26;
    p.gamma_plus = 1.26;
    p.modified = true;
    CHECK(beta_c_product_cdf(0.0, p) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(beta_c_product_cdf(40.0, p) == doctest::Approx(1.0).epsilon(1e-12));
    ModelParams sub = p;
    sub.gamma_minus = sub.gamma_plus = 0.6;
    CHECK_THROWS_AS(beta_c_product_cdf(0.0, sub), std::domain_error);
}

TEST_CASE("CDF monotonicity for determinant routes") {
    for (auto spec : {KernelSpec::extended_airy(), KernelSpec::goe2(0.5),
                      KernelSpec::f0(0.5, 0.5)}) {
        double prev = 0.0;
        for (double s = -5.0; s <= 3.0; s += 0.5) {
            double v = spec.variant == KernelSpec::Variant::F0Transition
                           ? f0_point(spec.omega_plus, spec.omega_minus, s)
                           : one_point_cdf(spec, s);
            CHECK(v >= prev - 1e-7);
            prev = v;
        }
    }
}

TEST_CASE("non-finite operator entries are flagged") {
    QuadratureGrid g = make_grid(KernelSpec::extended_airy(), {{0.0, 0.0}});
    auto op = assemble_functor(
        [](double, double, double, double) { return std::nan(""); }, g);
    CHECK_THROWS_AS(det1p(op), std::runtime_error);
}
