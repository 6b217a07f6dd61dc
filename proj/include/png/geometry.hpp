#pragma once

#include "png/model_params.hpp"

#include <optional>

namespace png {

// Crossing points of the straight and circular limit-shape branches.
struct CriticalPoints {
    double beta_minus = 0.0;
    double beta_plus = 0.0;
    std::optional<double> beta_c; // present only for gamma_plus*gamma_minus > 1
};

// Scaling frame at macroscopic position beta0: all closed-form constants
// needed to map raw lattice heights to scaled fluctuation variables.
struct ScalingFrame {
    long n = 0;                 // system size N (time t = 2N or 2N-1)
    double beta0 = 0.0;
    ModelParams params;

    double a = 0.0;             // a(beta0)
    double c = 0.0;             // c(beta0)
    double d = 0.0;             // d(beta0)
    double p_c = 0.0;           // double critical point p_c(beta0)
    double a_g_minus = 0.0;     // a_G-(beta0, gamma_minus)
    double a_g_plus = 0.0;      // a_G+(beta0, gamma_plus)
    double d_g_minus = 0.0;     // d_G(gamma_minus)
    double d_g_plus = 0.0;      // d_G(gamma_plus)
    double beta_minus = 0.0;
    double beta_plus = 0.0;
};

enum class ScaledVariant { Bulk, GaussianMinus, GaussianPlus };

// Circular branch a(beta), Eq-level closed form; |beta| < 1.
double bulk_shape(double beta, const ModelParams& params);
// Straight branches a_G-(beta, gamma) / a_G+(beta, gamma).
double edge_shape_minus(double beta, double gamma, const ModelParams& params);
double edge_shape_plus(double beta, double gamma, const ModelParams& params);

// Case logic of the thermodynamic limit shape (branches selected by
// beta_-, beta_+, beta_c). Returns the height-per-N value; tag optionally
// receives 'G-', 'A', or 'G+'.
double limit_shape(double beta, const ModelParams& params, char* branch_tag = nullptr);

CriticalPoints critical_points(const ModelParams& params);

double d_coeff(double beta, double alpha);   // d(beta)
double c_coeff(double beta, double alpha);   // c(beta)
double p_c_coeff(double beta, double alpha); // p_c(beta)
double d_g_coeff(double gamma, double alpha); // d_G(gamma)

ScalingFrame make_frame(long n, double beta0, const ModelParams& params);

// Scaled fluctuation variable from a raw height h at lattice position r,
// time t = 2N. Bulk uses Eq (2.12); Gaussian variants use Eq (2.15).
double to_scaled(long h, long r, const ScalingFrame& frame, ScaledVariant variant);

// tau value corresponding to lattice position r in this frame.
double tau_of_r(long r, const ScalingFrame& frame);
// Nearest lattice position realizing the requested tau (banker's rounding);
// *residual receives tau_of_r(r) - tau.
long r_of_tau(double tau, const ScalingFrame& frame, double* residual = nullptr);

// GOE^2 tangency intensity: gamma0 with beta_-(alpha, gamma0) = beta0.
double critical_gamma(double beta0, double alpha);

} // namespace png
