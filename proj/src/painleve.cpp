#include "png/painleve.hpp"
#include "png/airy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace png {

namespace {

struct ABState {
    long double a, b;
};

// Right-hand side of the Prop 4.1 omega-system at fixed s.
inline ABState ab_rhs(long double w, ABState y, const PointCoeffs& c) {
    long double q = c.q, qp = c.qp, s = c.s;
    return {q * q * y.a - (qp + w * q) * y.b,
            (qp - w * q) * y.a + (w * w - s - q * q) * y.b};
}

// Extended precision keeps the decaying solution clean against the
// e^{omega^3/3 - s omega} contaminating mode of forward integration.
ABState ab_integrate(ABState y, double w_from, double w_to, double step,
                     const PointCoeffs& c) {
    double span = w_to - w_from;
    int nsteps = std::max(1, static_cast<int>(std::ceil(std::fabs(span) / step)));
    long double h = static_cast<long double>(span) / nsteps;
    long double w = w_from;
    for (int k = 0; k < nsteps; ++k) {
        ABState k1 = ab_rhs(w, y, c);
        ABState k2 = ab_rhs(w + h / 2, {y.a + h / 2 * k1.a, y.b + h / 2 * k1.b}, c);
        ABState k3 = ab_rhs(w + h / 2, {y.a + h / 2 * k2.a, y.b + h / 2 * k2.b}, c);
        ABState k4 = ab_rhs(w + h, {y.a + h * k3.a, y.b + h * k3.b}, c);
        y.a += h / 6 * (k1.a + 2 * k2.a + 2 * k3.a + k4.a);
        y.b += h / 6 * (k1.b + 2 * k2.b + 2 * k3.b + k4.b);
        w += h;
    }
    return y;
}

// Large-w expansion from matching the omega-system order by order:
//   a = 1 - u/w + v/w^2 + a3/w^3,  b = q/w - (q u + q')/w^2 + b3/w^3
ABState ab_asymptotic(double w, const PointCoeffs& c) {
    double q = c.q, qp = c.qp, s = c.s, u = c.u, v = c.v;
    double b2 = -(q * u + qp);
    double b3 = q * v + qp * u + s * q + q * q * q;
    double a3 = (-qp * qp * v + (s + q * q) * (qp * b2 + q * b3) - q * qp - 2.0 * q * b2)
                / 3.0;
    double w2 = w * w, w3 = w2 * w;
    return {1.0 - u / w + v / w2 + a3 / w3, q / w + b2 / w2 + b3 / w3};
}

} // namespace

double PainleveTable::interp(const std::vector<double>& col, double sv) const {
    if (!covers(sv)) throw std::domain_error("PainleveTable: s out of grid");
    double pos = (s0 - sv) / step;
    size_t i = std::min(static_cast<size_t>(pos), size() - 2);
    double frac = pos - static_cast<double>(i);
    return col[i] * (1.0 - frac) + col[i + 1] * frac;
}

PainleveTable solve_q(double s0, double s_min, double step) {
    if (s0 < 6.0) throw std::invalid_argument("solve_q: s0 >= 6 required");
    if (step <= 0.0 || s_min >= s0) throw std::invalid_argument("solve_q: bad grid");

    size_t n = static_cast<size_t>(std::llround((s0 - s_min) / step));
    PainleveTable t;
    t.s0 = s0;
    t.s_min = s0 - static_cast<double>(n) * step;
    t.step = step;
    t.s.resize(n + 1);
    t.q.resize(n + 1);
    t.qp.resize(n + 1);
    t.u.resize(n + 1);
    t.v.resize(n + 1);
    t.e.resize(n + 1);
    t.f2.resize(n + 1);
    t.f12.resize(n + 1);

    // Long-double RK4: the Hastings-McLeod branch is unstable in both
    // directions and the extra mantissa keeps the branch to s ~ -10.
    long double q = airy_ai(s0), qp = airy_ai_prime(s0);
    long double h = step;
    long double iu = 0.0L, iq = 0.0L, iv = 0.0L; // int q^2, int q, int (x-s) q^2
    auto record = [&](size_t i, double sv) {
        t.s[i] = sv;
        t.q[i] = static_cast<double>(q);
        t.qp[i] = static_cast<double>(qp);
        t.u[i] = static_cast<double>(iu);
        t.v[i] = static_cast<double>((iu * iu - q * q) / 2.0L);
        t.e[i] = static_cast<double>(std::exp(-iq));
        t.f2[i] = static_cast<double>(std::exp(-iv));
        t.f12[i] = t.e[i] * t.f2[i];
    };
    record(0, s0);

    auto rhs = [](long double sv, long double qv, long double qpv,
                  long double& dq, long double& dqp) {
        dq = qpv;
        dqp = sv * qv + 2.0L * qv * qv * qv;
    };
    long double s = s0;
    for (size_t i = 0; i < n; ++i) {
        long double k1q, k1p, k2q, k2p, k3q, k3p, k4q, k4p;
        rhs(s, q, qp, k1q, k1p);
        rhs(s - h / 2, q - h / 2 * k1q, qp - h / 2 * k1p, k2q, k2p);
        rhs(s - h / 2, q - h / 2 * k2q, qp - h / 2 * k2p, k3q, k3p);
        rhs(s - h, q - h * k3q, qp - h * k3p, k4q, k4p);
        long double q_new = q - h / 6 * (k1q + 2 * k2q + 2 * k3q + k4q);
        long double qp_new = qp - h / 6 * (k1p + 2 * k2p + 2 * k3p + k4p);
        if (std::fabs(static_cast<double>(q_new)) > 1e6)
            throw std::runtime_error("solve_q: blow-up detected; raise s0 or shrink the range");
        // trapezoid accumulation of the integral columns
        iu += h * (q * q + q_new * q_new) / 2;
        iq += h * (q + q_new) / 2;
        long double u_prev = t.u[i];
        q = q_new;
        qp = qp_new;
        s -= h;
        iv += h * (u_prev + iu) / 2;
        record(i + 1, static_cast<double>(s));
    }
    return t;
}

PointCoeffs coeffs_at(const PainleveTable& t, double sv) {
    if (sv > t.s0) {
        // Analytic Airy tail: q = Ai, u from the first integral
        // q'^2 - s q^2 - q^4 = u (exact for Hastings-McLeod).
        AiryValue av = airy(sv);
        double q = av.ai, qp = av.ai_prime;
        double u = qp * qp - sv * q * q - q * q * q * q;
        double v = (u * u - q * q) / 2.0;
        return {sv, q, qp, u, v, 1.0, 1.0};
    }
    return {sv,
            t.interp(t.q, sv),
            t.interp(t.qp, sv),
            t.interp(t.u, sv),
            t.interp(t.v, sv),
            t.interp(t.e, sv),
            t.interp(t.f2, sv)};
}

ABPoint ab_point(const PointCoeffs& c, double omega, double step) {
    ABState y;
    if (omega <= 2.0) {
        y = ab_integrate({c.e, c.e}, 0.0, omega, step, c);
    } else {
        double w_start = std::max(3.0 * omega, 40.0);
        // RK4 absolute-stability bound: |omega^2 - s| h < 2.8
        double h = std::min(step, 1.5 / (w_start * w_start + std::fabs(c.s) + 1.0));
        y = ab_integrate(ab_asymptotic(w_start, c), w_start, omega, h, c);
    }
    ABState d = ab_rhs(omega, y, c);
    return {static_cast<double>(y.a), static_cast<double>(y.b),
            static_cast<double>(d.a), static_cast<double>(d.b)};
}

ABColumns baik_rains_ab(const PainleveTable& t, double omega, double step) {
    if (std::fabs(omega) > 2.0 + 1e-12)
        throw std::invalid_argument(
            "baik_rains_ab: |omega| <= 2 for whole-grid columns; use ab_point beyond");
    ABColumns cols;
    cols.omega = omega;
    size_t n = t.size();
    cols.a.assign(t.e.begin(), t.e.end());
    cols.b.assign(t.e.begin(), t.e.end());
    if (omega == 0.0) return cols;

    int nsteps = std::max(1, static_cast<int>(std::ceil(std::fabs(omega) / step)));
    double h = omega / nsteps;
    std::vector<double> k1a(n), k1b(n), k2a(n), k2b(n), k3a(n), k3b(n), k4a(n), k4b(n);
    auto rhs = [&](double wv, const std::vector<double>& av, const std::vector<double>& bv,
                   std::vector<double>& oa, std::vector<double>& ob) {
        for (size_t i = 0; i < n; ++i) {
            double q = t.q[i], qp = t.qp[i], sv = t.s[i];
            oa[i] = q * q * av[i] - (qp + wv * q) * bv[i];
            ob[i] = (qp - wv * q) * av[i] + (wv * wv - sv - q * q) * bv[i];
        }
    };
    std::vector<double> ta(n), tb(n);
    double w = 0.0;
    for (int k = 0; k < nsteps; ++k) {
        rhs(w, cols.a, cols.b, k1a, k1b);
        for (size_t i = 0; i < n; ++i) { ta[i] = cols.a[i] + h / 2 * k1a[i]; tb[i] = cols.b[i] + h / 2 * k1b[i]; }
        rhs(w + h / 2, ta, tb, k2a, k2b);
        for (size_t i = 0; i < n; ++i) { ta[i] = cols.a[i] + h / 2 * k2a[i]; tb[i] = cols.b[i] + h / 2 * k2b[i]; }
        rhs(w + h / 2, ta, tb, k3a, k3b);
        for (size_t i = 0; i < n; ++i) { ta[i] = cols.a[i] + h * k3a[i]; tb[i] = cols.b[i] + h * k3b[i]; }
        rhs(w + h, ta, tb, k4a, k4b);
        for (size_t i = 0; i < n; ++i) {
            cols.a[i] += h / 6 * (k1a[i] + 2 * k2a[i] + 2 * k3a[i] + k4a[i]);
            cols.b[i] += h / 6 * (k1b[i] + 2 * k2b[i] + 2 * k3b[i] + k4b[i]);
        }
        w += h;
    }
    return cols;
}

double transition_cdf(const PainleveTable& t, double s, double omega) {
    PointCoeffs c = coeffs_at(t, s);
    if (omega >= -2.0) return c.f2 * ab_point(c, omega).a;
    // a(s, omega) = b(s, -omega) e^{omega^3/3 - s omega}
    ABPoint p = ab_point(c, -omega);
    return c.f2 * p.b * std::exp(omega * omega * omega / 3.0 - s * omega);
}

double f0_cdf(const PainleveTable& t, double s, double wp, double wm) {
    PointCoeffs c = coeffs_at(t, s);
    ABPoint p = ab_point(c, wp);
    ABPoint m = ab_point(c, wm);
    double sum = wp + wm;
    double prod_a = p.a * m.a;
    if (std::fabs(sum) < 1e-9) {
        // diagonal limit of (a+ a- - b+ b-)/(w+ + w-)
        double dw = p.da * m.a + p.a * m.da - p.db * m.b - p.b * m.db;
        return prod_a * c.f2 + 0.5 * dw * c.u * c.f2;
    }
    return prod_a * c.f2 + (prod_a - p.b * m.b) * c.u * c.f2 / sum;
}

std::array<double, 4> mean_small_tau_series(const PainleveTable& t) {
    // Successive omega-derivatives of (a, b) at omega = 0, from the ODE
    // system and a(s,0) = b(s,0) = e^{-int q}:
    //   a1 = E (q^2 - q'), b1 = E (q' - s - q^2)
    //   a2 = E (q^4 - q - q'^2 + s q'), b2 = E (q^4 - q - q'^2 - s q' + s^2 + 2 s q^2)
    //   a3 = q^2 a2 - 2 q b1 - q' b2, b3 = -2 q a1 + q' a2 + 2E - (s + q^2) b2
    // Coefficient of tau^j in the mean is -(1/j!) int F2 a_j ds.
    size_t n = t.size();
    std::vector<double> ia1(n), ia2(n), ia3(n);
    for (size_t i = 0; i < n; ++i) {
        double q = t.q[i], qp = t.qp[i], sv = t.s[i], E = t.e[i];
        double a1 = E * (q * q - qp);
        double b1 = E * (qp - sv - q * q);
        double a2 = E * (q * q * q * q - q - qp * qp + sv * qp);
        double b2 = E * (q * q * q * q - q - qp * qp - sv * qp + sv * sv + 2.0 * sv * q * q);
        double a3 = q * q * a2 - 2.0 * q * b1 - qp * b2;
        ia1[i] = t.f2[i] * a1;
        ia2[i] = t.f2[i] * a2;
        ia3[i] = t.f2[i] * a3;
    }
    auto integral = [&](const std::vector<double>& f) {
        double acc = 0.0;
        for (size_t i = 0; i + 1 < n; ++i) acc += t.step * (f[i] + f[i + 1]) / 2.0;
        return acc; // descending grid: sum of |ds| equals the ascending integral
    };
    double c0 = column_moments(t, t.f12).mean;
    return {c0, -integral(ia1), -integral(ia2) / 2.0, -integral(ia3) / 6.0};
}

double mean_asymptotic(double tau, MeanRegime regime) {
    if (std::fabs(tau) < 2.0)
        throw std::domain_error("mean_asymptotic: |tau| >= 2 required");
    if (regime == MeanRegime::LargePositive) return -1.77109 + 1.0 / tau;
    return tau * tau;
}

double transition_mean(const PainleveTable& t, double tau) {
    if (tau >= -2.0) {
        const double ds = 0.01;
        std::vector<double> ss, ff;
        for (double sv = t.s_min; sv <= t.s0 + 1e-9; sv += ds) {
            ss.push_back(sv);
            ff.push_back(transition_cdf(t, sv, tau));
        }
        return moments(ss, ff).mean;
    }
    // Mass sits near s = tau^2; use a = b(s,-tau) e^{tau^3/3 - s tau} on an
    // extended analytic grid.
    double lo = 0.0, hi = tau * tau + 10.0 * std::sqrt(-tau) + 12.0;
    const double ds = 0.02;
    std::vector<double> ss, ff;
    for (double sv = lo; sv <= hi; sv += ds) {
        PointCoeffs c = coeffs_at(t, sv);
        ABPoint p = ab_point(c, -tau, 2e-3);
        double F = c.f2 * p.b * std::exp(tau * tau * tau / 3.0 - sv * tau);
        ss.push_back(sv);
        ff.push_back(std::min(1.0, F));
    }
    return moments(ss, ff).mean;
}

Moments moments(const std::vector<double>& s, const std::vector<double>& F) {
    if (s.size() != F.size() || s.size() < 4)
        throw std::invalid_argument("moments: need matching grids, n >= 4");
    // E[X^k] = int_0^inf k s^{k-1} (1 - F) ds - int_{-inf}^0 k s^{k-1} F ds;
    // panels straddling the origin are split there (the integrand jumps).
    auto raw = [&](int k) {
        auto g_side = [&](double sv, double fv, bool pos) {
            double tail = pos ? 1.0 - fv : -fv;
            return k * std::pow(sv, k - 1) * tail;
        };
        double acc = 0.0;
        for (size_t i = 0; i + 1 < s.size(); ++i) {
            double a = s[i], b = s[i + 1];
            if (a < 0.0 && b > 0.0) {
                double f0 = F[i] + (F[i + 1] - F[i]) * (0.0 - a) / (b - a);
                acc += (0.0 - a) * (g_side(a, F[i], false) + g_side(0.0, f0, false)) / 2.0;
                acc += (b - 0.0) * (g_side(0.0, f0, true) + g_side(b, F[i + 1], true)) / 2.0;
            } else {
                bool pos = (a + b) > 0.0; // panel side decides the tail form
                acc += (b - a) * (g_side(a, F[i], pos) + g_side(b, F[i + 1], pos)) / 2.0;
            }
        }
        return acc;
    };
    double m1 = raw(1), m2 = raw(2), m3 = raw(3), m4 = raw(4);
    double var = m2 - m1 * m1;
    double sd = std::sqrt(var);
    double mu3 = m3 - 3.0 * m1 * m2 + 2.0 * m1 * m1 * m1;
    double mu4 = m4 - 4.0 * m1 * m3 + 6.0 * m1 * m1 * m2 - 3.0 * m1 * m1 * m1 * m1;
    return {m1, sd, mu3 / (sd * sd * sd), mu4 / (var * var) - 3.0};
}

Moments column_moments(const PainleveTable& t, const std::vector<double>& col) {
    std::vector<double> s(t.s.rbegin(), t.s.rend());
    std::vector<double> F(col.rbegin(), col.rend());
    return moments(s, F);
}

} // namespace png
