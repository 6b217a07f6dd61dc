#include "png/geometry.hpp"

#include <cmath>

namespace png {

namespace {

double beta_minus_of(double gamma, double alpha) {
    double a2 = alpha * alpha, g2 = gamma * gamma;
    return (1.0 - a2) * (g2 - 1.0) / (1.0 + a2 - 4.0 * alpha * gamma + g2 + a2 * g2);
}

// a_G+-(beta, gamma) = A(gamma) +- B(gamma) beta
double edge_a(double gamma, double alpha) {
    return alpha * (1.0 - 2.0 * alpha * gamma + gamma * gamma)
           / ((gamma - alpha) * (1.0 - alpha * gamma));
}

double edge_b(double gamma, double alpha) {
    return alpha * (gamma * gamma - 1.0)
           / ((gamma - alpha) * (1.0 - alpha * gamma));
}

} // namespace

double bulk_shape(double beta, const ModelParams& p) {
    if (!(std::fabs(beta) < 1.0)) throw std::domain_error("bulk_shape: |beta| < 1 required");
    return 2.0 * p.alpha / (1.0 - p.alpha * p.alpha) * (p.alpha + std::sqrt(1.0 - beta * beta));
}

double edge_shape_minus(double beta, double gamma, const ModelParams& p) {
    return edge_a(gamma, p.alpha) - edge_b(gamma, p.alpha) * beta;
}

double edge_shape_plus(double beta, double gamma, const ModelParams& p) {
    return edge_a(gamma, p.alpha) + edge_b(gamma, p.alpha) * beta;
}

CriticalPoints critical_points(const ModelParams& p) {
    CriticalPoints cp;
    cp.beta_minus = beta_minus_of(p.gamma_minus, p.alpha);
    cp.beta_plus = -beta_minus_of(p.gamma_plus, p.alpha);
    if (p.gamma_plus * p.gamma_minus > 1.0) {
        // a_G-(beta) = a_G+(beta) is affine in beta.
        double num = edge_a(p.gamma_minus, p.alpha) - edge_a(p.gamma_plus, p.alpha);
        double den = edge_b(p.gamma_plus, p.alpha) + edge_b(p.gamma_minus, p.alpha);
        cp.beta_c = num / den;
    }
    return cp;
}

double limit_shape(double beta, const ModelParams& p, char* branch_tag) {
    if (!(std::fabs(beta) < 1.0)) throw std::domain_error("limit_shape: |beta| < 1 required");
    CriticalPoints cp = critical_points(p);
    char tag;
    double v;
    if (cp.beta_c) {
        if (beta < *cp.beta_c) {
            v = edge_shape_minus(beta, p.gamma_minus, p);
            tag = '-';
        } else {
            v = edge_shape_plus(beta, p.gamma_plus, p);
            tag = '+';
        }
    } else if (beta < cp.beta_minus) {
        v = edge_shape_minus(beta, p.gamma_minus, p);
        tag = '-';
    } else if (beta > cp.beta_plus) {
        v = edge_shape_plus(beta, p.gamma_plus, p);
        tag = '+';
    } else {
        v = bulk_shape(beta, p);
        tag = 'A';
    }
    if (branch_tag) *branch_tag = tag;
    return v;
}

double d_coeff(double beta, double alpha) {
    double sp = std::sqrt(1.0 + beta), sm = std::sqrt(1.0 - beta);
    return std::pow(alpha, 1.0 / 3.0) / ((1.0 - alpha * alpha) * std::pow(1.0 - beta * beta, 1.0 / 6.0))
           * std::pow(sp + alpha * sm, 2.0 / 3.0) * std::pow(sm + alpha * sp, 2.0 / 3.0);
}

double c_coeff(double beta, double alpha) {
    double sp = std::sqrt(1.0 + beta), sm = std::sqrt(1.0 - beta);
    return std::pow(alpha, -1.0 / 3.0) * std::pow(1.0 - beta * beta, 2.0 / 3.0)
           * std::pow(sp + alpha * sm, 1.0 / 3.0) * std::pow(sm + alpha * sp, 1.0 / 3.0);
}

double p_c_coeff(double beta, double alpha) {
    double sp = std::sqrt(1.0 + beta), sm = std::sqrt(1.0 - beta);
    return (sp + alpha * sm) / (sm + alpha * sp);
}

double d_g_coeff(double gamma, double alpha) {
    if (!(gamma > alpha && gamma < 1.0 / alpha))
        throw std::domain_error("d_g_coeff: gamma in (alpha, 1/alpha) required");
    double a2 = alpha * alpha, g2 = gamma * gamma;
    return std::sqrt(alpha * gamma * (1.0 + a2 - 4.0 * alpha * gamma + g2 + a2 * g2))
           / ((1.0 - alpha * gamma) * (gamma - alpha));
}

ScalingFrame make_frame(long n, double beta0, const ModelParams& p) {
    if (!(std::fabs(beta0) < 1.0)) throw std::domain_error("make_frame: |beta0| < 1 required");
    ScalingFrame f;
    f.n = n;
    f.beta0 = beta0;
    f.params = p;
    f.a = bulk_shape(beta0, p);
    f.c = c_coeff(beta0, p.alpha);
    f.d = d_coeff(beta0, p.alpha);
    f.p_c = p_c_coeff(beta0, p.alpha);
    f.a_g_minus = edge_shape_minus(beta0, p.gamma_minus, p);
    f.a_g_plus = edge_shape_plus(beta0, p.gamma_plus, p);
    if (p.gamma_minus > p.alpha) f.d_g_minus = d_g_coeff(p.gamma_minus, p.alpha);
    if (p.gamma_plus > p.alpha) f.d_g_plus = d_g_coeff(p.gamma_plus, p.alpha);
    CriticalPoints cp = critical_points(p);
    f.beta_minus = cp.beta_minus;
    f.beta_plus = cp.beta_plus;
    return f;
}

double tau_of_r(long r, const ScalingFrame& f) {
    double n13 = std::cbrt(static_cast<double>(f.n));
    return (static_cast<double>(r) - 2.0 * f.beta0 * f.n) / (2.0 * f.c * n13 * n13);
}

long r_of_tau(double tau, const ScalingFrame& f, double* residual) {
    double n13 = std::cbrt(static_cast<double>(f.n));
    double r_exact = 2.0 * f.beta0 * f.n + 2.0 * f.c * n13 * n13 * tau;
    long r = static_cast<long>(std::nearbyint(r_exact)); // ties to even
    if (residual) *residual = tau_of_r(r, f) - tau;
    return r;
}

double to_scaled(long h, long r, const ScalingFrame& f, ScaledVariant variant) {
    double n = static_cast<double>(f.n);
    double n13 = std::cbrt(n);
    switch (variant) {
    case ScaledVariant::Bulk: {
        double tau = tau_of_r(r, f);
        double beta_sh = f.beta0 + f.c * tau / n13;
        return (static_cast<double>(h) - bulk_shape(beta_sh, f.params) * n) / (f.d * n13);
    }
    case ScaledVariant::GaussianMinus:
        return (static_cast<double>(h) - f.a_g_minus * n) / (f.d_g_minus * std::sqrt(n));
    case ScaledVariant::GaussianPlus:
        return (static_cast<double>(h) - f.a_g_plus * n) / (f.d_g_plus * std::sqrt(n));
    }
    throw std::logic_error("to_scaled: bad variant");
}

double critical_gamma(double beta0, double alpha) {
    // beta_-(gamma) = beta0 is a quadratic in gamma:
    // g^2 [(1-a^2) - beta0 (1+a^2)] + 4 a beta0 g - [(1-a^2) + beta0 (1+a^2)] = 0
    double a2 = alpha * alpha;
    double qa = (1.0 - a2) - beta0 * (1.0 + a2);
    double qb = 4.0 * alpha * beta0;
    double qc = -((1.0 - a2) + beta0 * (1.0 + a2));
    double g;
    if (std::fabs(qa) < 1e-14) {
        g = -qc / qb;
    } else {
        double disc = qb * qb - 4.0 * qa * qc;
        if (disc < 0.0) throw std::domain_error("critical_gamma: no real root");
        double r1 = (-qb + std::sqrt(disc)) / (2.0 * qa);
        double r2 = (-qb - std::sqrt(disc)) / (2.0 * qa);
        g = (r1 > alpha && r1 < 1.0 / alpha) ? r1 : r2;
    }
    if (!(g > alpha && g < 1.0 / alpha))
        throw std::domain_error("critical_gamma: no admissible root in (alpha, 1/alpha)");
    return g;
}

} // namespace png
