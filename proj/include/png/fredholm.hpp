#pragma once

#include "png/geometry.hpp"
#include "png/kernels.hpp"
#include "png/painleve.hpp"

#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace png {

struct GridOptions {
    double cutoff = 10.0; // window length L above each threshold
    int nodes = 60;       // Gauss-Legendre nodes per slot
    bool adapt = true;    // enlarge for slowly decaying kernel columns
};

// Per time slot: threshold s, label tau, Gauss nodes/weights on (s, s+L].
struct QuadratureGrid {
    struct Slot {
        double tau = 0.0;
        double s = 0.0;
        std::vector<double> x, w;
    };
    std::vector<Slot> slots;
    size_t total() const;
};

// points are (tau_j, s_j); for Brownian specs tau_j is beta_j.
QuadratureGrid make_grid(const KernelSpec& spec,
                         const std::vector<std::pair<double, double>>& points,
                         const GridOptions& opts = {});

// Symmetrized discretization M = -W^{1/2} K W^{1/2} of K*G (G = -chi).
struct DiscretizedOperator {
    Eigen::MatrixXd m;
    QuadratureGrid grid;
    KernelSpec spec;
};

DiscretizedOperator assemble(const KernelSpec& spec, const QuadratureGrid& grid);
// Test hook: arbitrary kernel functor K(tau1, xi1, tau2, xi2).
DiscretizedOperator assemble_functor(
    const std::function<double(double, double, double, double)>& kernel,
    const QuadratureGrid& grid);

// det(I + M) by pivoted LU.
double det1p(const DiscretizedOperator& op);

// P[limit law <= s] at a single time label tau.
double one_point_cdf(const KernelSpec& spec, double s, double tau = 0.0,
                     const GridOptions& opts = {});

// Joint law at up to 4 points (tau_j, s_j).
double joint_cdf(const KernelSpec& spec,
                 const std::vector<std::pair<double, double>>& points,
                 const GridOptions& opts = {});

// Nystrom resolvent evaluation of the Baik-Rains functions
//   a(s,w) = 1 - <(1 - K2)^{-1} Ai, B(., w)>,  b(s,w) = [(1 - K2)^{-1} B](s)
// together with F2(s) and F(s) = F2 a from the same grid.
struct RankOneAB {
    double a, b, f2, cdf;
};
RankOneAB rank_one_ab(double s, double omega, const GridOptions& opts = {});

// Direct evaluation of the F0 one-point law
//   (1 + (w+ + w-)^{-1} d/ds) det(1 + K G),
// derivative by central differencing. Requires w+ + w- > 0; otherwise
// delegates to the analytically continued painleve route (table required).
double f0_point(double omega_plus, double omega_minus, double s,
                const PainleveTable* table = nullptr, double tau = 0.0,
                const GridOptions& opts = {});

enum class EdgeSide { Left, Right };
// Chained Gaussian propagator integrals for the edge region; points are
// (beta_j, s_j), ordered toward the edge crossing at beta_edge.
double gaussian_joint(const std::vector<std::pair<double, double>>& points,
                      double beta_edge, EdgeSide side = EdgeSide::Left);

// Theorem 2.1 (ii-b) product-of-Gaussians law at beta_c.
double beta_c_product_cdf(double s, const ModelParams& params);

double norm_cdf(double x);

} // namespace png
