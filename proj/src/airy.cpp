#include "png/airy.hpp"
#include "png/dd.hpp"

#include <cmath>

namespace png {

using detail::dd;

namespace {

// Ai(0) and -Ai'(0) as double-double pairs.
const dd kAi0   = {0.3550280538878172, 2.05233632436212e-17};
const dd kMAip0 = {0.2588194037928068, -2.522243111610832e-17};

constexpr double kInvTwoSqrtPi = 0.28209479177387814; // 1/(2 sqrt(pi))
constexpr double kInvSqrtPi = 0.5641895835477563;

// u_k of the Poincare expansion, u_0 = 1,
// u_k = u_{k-1} (6k-5)(6k-3)(6k-1) / (216 k (2k-1)); v_k = u_k (6k+1)/(1-6k).
struct AsymCoeffs {
    double u[48];
    double v[48];
    AsymCoeffs() {
        u[0] = 1.0;
        v[0] = 1.0;
        for (int k = 1; k < 48; ++k) {
            u[k] = u[k - 1] * (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0)
                   / (216.0 * k * (2.0 * k - 1.0));
            v[k] = u[k] * (6.0 * k + 1.0) / (1.0 - 6.0 * k);
        }
    }
};
const AsymCoeffs kC;

} // namespace

namespace detail {

AiryValue airy_series(double x) {
    // Ai(x)  = Ai(0) f(x) + Ai'(0) g(x)
    // Ai'(x) = Ai(0) f'(x) + Ai'(0) g'(x)
    // f, g and their derivatives satisfy simple 3-term ratios in x^3.
    dd x3 = mul(mul(from(x), from(x)), x);

    dd tf = from(1.0), f = tf;        // f:  term_{k+1} = term_k x^3/((3k+2)(3k+3))
    dd tg = from(x), g = tg;          // g:  term_{k+1} = term_k x^3/((3k+3)(3k+4))
    dd tfp = mul(mul(from(x), from(x)), 0.5); // f': x^2/2, then x^3/((3k)(3k+2))
    dd fp = tfp;
    dd tgp = from(1.0), gp = tgp;     // g': term_{k+1} = term_k x^3/((3k+1)(3k+3))

    for (int k = 0; k < 64; ++k) {
        tf = div(mul(tf, x3), (3.0 * k + 2.0) * (3.0 * k + 3.0));
        f = add(f, tf);
        tg = div(mul(tg, x3), (3.0 * k + 3.0) * (3.0 * k + 4.0));
        g = add(g, tg);
        // f' terms indexed from k=1; advance with ratio x^3/((3k)(3k+2)) for k>=1
        if (k >= 1) {
            tfp = div(mul(tfp, x3), (3.0 * k) * (3.0 * k + 2.0));
        }
        fp = (k == 0) ? fp : add(fp, tfp);
        tgp = div(mul(tgp, x3), (3.0 * k + 1.0) * (3.0 * k + 3.0));
        gp = add(gp, tgp);

        double scale = std::fabs(f.hi) + std::fabs(g.hi) + 1.0;
        if (std::fabs(tf.hi) < 1e-35 * scale && std::fabs(tg.hi) < 1e-35 * scale)
            break;
    }

    dd ai = add(mul(kAi0, f), mul(mul(kMAip0, g), -1.0));
    dd aip = add(mul(kAi0, fp), mul(mul(kMAip0, gp), -1.0));
    return {x, ai.hi + ai.lo, aip.hi + aip.lo};
}

AiryValue airy_asymptotic_pos(double x) {
    double zeta = (2.0 / 3.0) * x * std::sqrt(x);
    double su = 0.0, sv = 0.0, pw = 1.0;
    for (int k = 0; k < 48; ++k) {
        double tu = kC.u[k] * pw;
        double tv = kC.v[k] * pw;
        su += tu;
        sv += tv;
        pw *= -1.0 / zeta;
        if (std::fabs(kC.u[k] * pw) < 1e-19 * std::fabs(su)) break;
        if (k > 1 && kC.u[k] / std::pow(zeta, k) > kC.u[k - 1] / std::pow(zeta, k - 1.0))
            break; // past optimal truncation
    }
    double pre = std::exp(-zeta) * kInvTwoSqrtPi;
    double x4 = std::pow(x, 0.25);
    return {x, pre / x4 * su, -pre * x4 * sv};
}

AiryValue airy_asymptotic_neg(double x) {
    double t = -x;
    double zeta = (2.0 / 3.0) * t * std::sqrt(t);
    // Separate even/odd tails of the u- and v-series.
    double ue = 0.0, uo = 0.0, ve = 0.0, vo = 0.0;
    double z2 = zeta * zeta;
    double pw = 1.0; // (-1)^k / zeta^{2k}
    for (int k = 0; 2 * k + 1 < 48; ++k) {
        ue += kC.u[2 * k] * pw;
        ve += kC.v[2 * k] * pw;
        uo += kC.u[2 * k + 1] * pw / zeta;
        vo += kC.v[2 * k + 1] * pw / zeta;
        pw *= -1.0 / z2;
        if (kC.u[2 * k] / std::pow(zeta, 2.0 * k) < 1e-19) break;
    }
    double c = std::cos(zeta - 0.25 * M_PI);
    double s = std::sin(zeta - 0.25 * M_PI);
    double t4 = std::pow(t, 0.25);
    double ai = kInvSqrtPi / t4 * (c * ue + s * uo);
    double aip = kInvSqrtPi * t4 * (s * ve - c * vo);
    return {x, ai, aip};
}

} // namespace detail

AiryValue airy(double x) {
    if (!std::isfinite(x)) throw std::domain_error("airy: non-finite argument");
    if (x > 10.0) return detail::airy_asymptotic_pos(x);
    if (x < -10.0) return detail::airy_asymptotic_neg(x);
    return detail::airy_series(x);
}

double airy_ai(double x) { return airy(x).ai; }
double airy_ai_prime(double x) { return airy(x).ai_prime; }

} // namespace png
