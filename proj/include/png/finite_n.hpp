#pragma once

#include "png/model_params.hpp"

#include <utility>
#include <vector>

namespace png {

// Contour radii for the double integral; gamma_- < r2 < r1 < 1/gamma_+.
// r1 = r2 = 0 picks admissible defaults from the parameters.
struct ContourConfig {
    double r1 = 0.0;
    double r2 = 0.0;
    int n_c = 256; // trapezoid nodes per circle

    ContourConfig resolved(const ModelParams& params) const;
    void validate(const ModelParams& params) const;
};

// Finite truncation of the exceedance sums: levels l_j + 1 .. l_j + x_max.
struct LatticeWindow {
    long x_max = 20;
};

// Double contour integral K~_N (Eq-level kernel); value is real.
double ktilde(long u1, long x1, long u2, long x2, const ModelParams& params,
              long n, const ContourConfig& cfg = {});

// Single contour weight phi_{2u1,2u2}(x1,x2); zero for u2 <= u1.
double phi_weight(long u1, long x1, long u2, long x2, const ModelParams& params,
                  int n_c = 256);

struct FiniteCdfResult {
    double value = 0.0;
    double truncation_bound = 0.0;
};

// P[h(r_1, M) <= l_1, ..., h(r_m, M) <= l_m] at odd time M = 2N-1 for the
// unmodified model, via det(I - K_N) over the truncated exceedance set.
// points are (r_j, l_j) with r_j = 2 u_j even. Requires gamma_+*gamma_- < 1.
FiniteCdfResult finite_cdf(const ModelParams& params, long n,
                           const std::vector<std::pair<long, long>>& points,
                           const LatticeWindow& window = {},
                           const ContourConfig& cfg = {});

// Modified-model probability via
// [P+(l) - gamma_+ gamma_- P+(l - 1)] / (1 - gamma_+ gamma_-).
FiniteCdfResult modified_cdf(const ModelParams& params, long n,
                             const std::vector<std::pair<long, long>>& points,
                             const LatticeWindow& window = {},
                             const ContourConfig& cfg = {});

} // namespace png
