#include "png/kernels.hpp"
#include "png/airy.hpp"
#include "png/quadrature.hpp"
#include "png/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace png {

namespace {

double log_bound2(double x1, double x2, double c, double lam) {
    auto dec = [](double v) {
        return v > 1.0 ? -(2.0 / 3.0) * v * std::sqrt(v) : 0.0;
    };
    return -c * lam + dec(x1 + lam) + dec(x2 + lam);
}

inline double gaussian_density(double x, double var) {
    return std::exp(-x * x / (2.0 * var)) / std::sqrt(2.0 * M_PI * var);
}

} // namespace

double airy_product_integral(double c, double x1, double x2) {
    double peak = log_bound2(x1, x2, c, 0.0);
    double cutoff = 4.0;
    for (double lam = 1.0; lam <= 600.0; lam += 1.0) {
        double lb = log_bound2(x1, x2, c, lam);
        peak = std::max(peak, lb);
        cutoff = lam;
        if (lb < peak - 46.0 && lam > -std::min(x1, x2) + 2.0) break;
    }
    int panels = std::max(4, static_cast<int>(std::ceil(cutoff / 2.0)));
    return integrate_panels(
        [&](double lam) {
            return std::exp(-c * lam) * airy_ai(x1 + lam) * airy_ai(x2 + lam);
        },
        0.0, cutoff, panels, 24);
}

double airy_product_bilateral(double t, double x1, double x2) {
    if (!(t > 0.0)) throw std::domain_error("airy_product_bilateral: t > 0 required");
    double ex = t * t * t / 12.0 - t * (x1 + x2) / 2.0 - (x1 - x2) * (x1 - x2) / (4.0 * t);
    return std::exp(ex) / (2.0 * std::sqrt(M_PI * t));
}

double extended_airy(double tau1, double xi1, double tau2, double xi2) {
    double c = tau1 - tau2;
    if (c >= 0.0) return airy_product_integral(c, xi1, xi2);
    // tau1 < tau2: -int_{-inf}^0 = int_0^inf - int_{-inf}^inf
    return airy_product_integral(c, xi1, xi2) - airy_product_bilateral(-c, xi1, xi2);
}

double goe2_transition(double tau1, double xi1, double tau2, double xi2, double omega) {
    double k2 = extended_airy(tau1, xi1, tau2, xi2);
    double nu = omega + tau2;
    double sep;
    if (nu >= 0.0) {
        sep = b_transition(xi2, nu);
    } else {
        sep = -airy_exp_integral(xi2, -nu)
              + std::exp((tau2 * tau2 * tau2 + omega * omega * omega) / 3.0 - xi2 * nu);
    }
    return k2 + airy_ai(xi1) * sep;
}

double f0_bscript(double omega_plus, double tau1, double xi1) {
    double mu = omega_plus - tau1;
    if (mu >= 0.0) return b_transition(xi1, mu);
    return -airy_exp_integral(xi1, -mu)
           + std::exp((-tau1 * tau1 * tau1 + omega_plus * omega_plus * omega_plus) / 3.0
                      - xi1 * mu);
}

double f0_bscript_prime(double omega_minus, double tau2, double xi2) {
    double nu = omega_minus + tau2;
    if (nu >= 0.0) return b_transition(xi2, nu);
    return -airy_exp_integral(xi2, -nu)
           + std::exp((tau2 * tau2 * tau2 + omega_minus * omega_minus * omega_minus) / 3.0
                      - xi2 * nu);
}

double f0_transition(double tau1, double xi1, double tau2, double xi2,
                     double omega_plus, double omega_minus) {
    double k2 = extended_airy(tau1, xi1, tau2, xi2);
    return k2 + (omega_plus + omega_minus) * f0_bscript(omega_plus, tau1, xi1)
                    * f0_bscript_prime(omega_minus, tau2, xi2);
}

double brownian_kernel(double beta1, double xi1, double beta2, double xi2,
                       double beta_edge) {
    if (!(beta1 < beta_edge && beta2 < beta_edge))
        throw std::domain_error("brownian_kernel: beta_j < beta_edge required");
    double diag = gaussian_density(xi1, beta_edge - beta1);
    if (beta1 >= beta2) return diag;
    return diag - gaussian_density(xi2 - xi1, beta2 - beta1);
}

double kernel_eval(const KernelSpec& spec, double t1, double x1, double t2, double x2) {
    switch (spec.variant) {
    case KernelSpec::Variant::ExtendedAiry:
        return extended_airy(t1, x1, t2, x2);
    case KernelSpec::Variant::Goe2Transition:
        return goe2_transition(t1, x1, t2, x2, spec.omega);
    case KernelSpec::Variant::F0Transition:
        return f0_transition(t1, x1, t2, x2, spec.omega_plus, spec.omega_minus);
    case KernelSpec::Variant::Brownian:
        return brownian_kernel(t1, x1, t2, x2, spec.beta_edge);
    }
    throw std::logic_error("kernel_eval: bad variant");
}

} // namespace png
