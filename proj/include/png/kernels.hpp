#pragma once

#include <vector>

namespace png {

// Tagged choice of limiting kernel. For Brownian the "time" labels are the
// macroscopic positions beta_j and beta_edge is the relevant beta_-.
struct KernelSpec {
    enum class Variant { ExtendedAiry, Goe2Transition, F0Transition, Brownian };
    Variant variant = Variant::ExtendedAiry;
    double omega = 0.0;          // Goe2Transition
    double omega_plus = 0.0;     // F0Transition
    double omega_minus = 0.0;    // F0Transition
    double beta_edge = 0.0;      // Brownian
    std::vector<double> taus;    // time (or position) labels

    static KernelSpec extended_airy() { return {}; }
    static KernelSpec goe2(double omega) {
        KernelSpec k;
        k.variant = Variant::Goe2Transition;
        k.omega = omega;
        return k;
    }
    static KernelSpec f0(double omega_plus, double omega_minus) {
        KernelSpec k;
        k.variant = Variant::F0Transition;
        k.omega_plus = omega_plus;
        k.omega_minus = omega_minus;
        return k;
    }
    static KernelSpec brownian(double beta_edge) {
        KernelSpec k;
        k.variant = Variant::Brownian;
        k.beta_edge = beta_edge;
        return k;
    }
};

// lambda-integral core shared by the Airy-type kernels:
//   int_0^inf e^{-c lam} Ai(x1 + lam) Ai(x2 + lam) dlam   (any real c)
double airy_product_integral(double c, double x1, double x2);

// Bilateral transform int_{-inf}^{inf} e^{t lam} Ai(x1+lam) Ai(x2+lam) dlam,
// closed form, t > 0.
double airy_product_bilateral(double t, double x1, double x2);

// Extended Airy kernel K2 of the Airy process.
double extended_airy(double tau1, double xi1, double tau2, double xi2);

// GOE^2 -> GUE/Gaussian transition kernel (two branches in omega + tau2).
double goe2_transition(double tau1, double xi1, double tau2, double xi2, double omega);

// F0 -> Gaussian transition kernel, separable part
// (w+ + w-) Bscr(w+,tau1,xi1) Bscr'(w-,tau2,xi2).
double f0_transition(double tau1, double xi1, double tau2, double xi2,
                     double omega_plus, double omega_minus);
// The two script-B factors (exposed for tests).
double f0_bscript(double omega_plus, double tau1, double xi1);
double f0_bscript_prime(double omega_minus, double tau2, double xi2);

// Brownian edge kernel; requires beta1, beta2 < beta_edge.
double brownian_kernel(double beta1, double xi1, double beta2, double xi2,
                       double beta_edge);

// Generic pointwise evaluation of a spec'd kernel.
double kernel_eval(const KernelSpec& spec, double t1, double x1, double t2, double x2);

} // namespace png
