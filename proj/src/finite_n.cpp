#include "png/finite_n.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace png {

namespace {

using cplx = std::complex<double>;

std::vector<cplx> circle_nodes(double radius, int n_c) {
    std::vector<cplx> z(static_cast<size_t>(n_c));
    for (int j = 0; j < n_c; ++j) {
        double th = 2.0 * M_PI * j / n_c;
        z[static_cast<size_t>(j)] = std::polar(radius, th);
    }
    return z;
}

cplx ipow(cplx z, long p) {
    if (p < 0) return 1.0 / ipow(z, -p);
    cplx acc = 1.0, base = z;
    while (p > 0) {
        if (p & 1) acc *= base;
        base *= base;
        p >>= 1;
    }
    return acc;
}

// x-independent node factors of the two contour integrands.
std::vector<cplx> base_factor_z1(const std::vector<cplx>& z, const ModelParams& p,
                                 long n, long u) {
    std::vector<cplx> f(z.size());
    for (size_t j = 0; j < z.size(); ++j) {
        cplx zz = z[j];
        f[j] = ipow(1.0 - p.alpha / zz, n - 1 + u) / ipow(1.0 - p.alpha * zz, n - 1 - u)
               * (1.0 - p.gamma_minus / zz) / (1.0 - p.gamma_plus * zz);
    }
    return f;
}

std::vector<cplx> base_factor_z2(const std::vector<cplx>& z, const ModelParams& p,
                                 long n, long u) {
    std::vector<cplx> f(z.size());
    for (size_t j = 0; j < z.size(); ++j) {
        cplx zz = z[j];
        f[j] = ipow(1.0 - p.alpha * zz, n - 1 - u) / ipow(1.0 - p.alpha / zz, n - 1 + u)
               * (1.0 - p.gamma_plus * zz) / (1.0 - p.gamma_minus / zz);
    }
    return f;
}

} // namespace

ContourConfig ContourConfig::resolved(const ModelParams& p) const {
    ContourConfig c = *this;
    double lo = p.gamma_minus, hi = 1.0 / p.gamma_plus;
    if (c.r2 == 0.0) c.r2 = lo + 0.4 * (hi - lo);
    if (c.r1 == 0.0) c.r1 = lo + 0.7 * (hi - lo);
    c.validate(p);
    return c;
}

void ContourConfig::validate(const ModelParams& p) const {
    if (!(p.gamma_minus < r2 && r2 < r1 && r1 < 1.0 / p.gamma_plus))
        throw std::invalid_argument(
            "ContourConfig: need gamma_- < R2 < R1 < 1/gamma_+");
    if (n_c < 16) throw std::invalid_argument("ContourConfig: n_c too small");
}

double ktilde(long u1, long x1, long u2, long x2, const ModelParams& p, long n,
              const ContourConfig& cfg_in) {
    ContourConfig cfg = cfg_in.resolved(p);
    auto z1 = circle_nodes(cfg.r1, cfg.n_c);
    auto z2 = circle_nodes(cfg.r2, cfg.n_c);
    auto f1 = base_factor_z1(z1, p, n, u1);
    auto f2 = base_factor_z2(z2, p, n, u2);
    cplx acc = 0.0;
    for (size_t j = 0; j < z1.size(); ++j) {
        cplx t1 = f1[j] * ipow(z1[j], -x1);
        cplx inner = 0.0;
        for (size_t k = 0; k < z2.size(); ++k)
            inner += f2[k] * ipow(z2[k], x2) * z1[j] / (z1[j] - z2[k]);
        acc += t1 * inner;
    }
    double pre = std::pow(1.0 - p.alpha, 2.0 * static_cast<double>(u2 - u1));
    cplx val = pre * acc / (static_cast<double>(cfg.n_c) * static_cast<double>(cfg.n_c));
    return val.real();
}

double phi_weight(long u1, long x1, long u2, long x2, const ModelParams& p, int n_c) {
    if (u2 <= u1) return 0.0;
    auto z = circle_nodes(1.0, n_c);
    cplx acc = 0.0;
    for (size_t j = 0; j < z.size(); ++j) {
        cplx zz = z[j];
        acc += ipow(zz, x2 - x1) * ipow((1.0 - p.alpha * zz) * (1.0 - p.alpha / zz), u2 - u1);
    }
    double pre = std::pow(1.0 - p.alpha, 2.0 * static_cast<double>(u2 - u1));
    return (pre * acc / static_cast<double>(n_c)).real();
}

namespace {

// Dense K_N over the truncated exceedance sets of every point, with the
// x-dependence pulled out of cached contour sums.
Eigen::MatrixXd assemble_kn(const ModelParams& p, long n,
                            const std::vector<std::pair<long, long>>& points,
                            const LatticeWindow& window, const ContourConfig& cfg) {
    size_t m = points.size();
    long w = window.x_max;
    auto z1 = circle_nodes(cfg.r1, cfg.n_c);
    auto z2 = circle_nodes(cfg.r2, cfg.n_c);

    std::vector<long> us(m);
    for (size_t j = 0; j < m; ++j) {
        if (points[j].first % 2 != 0)
            throw std::invalid_argument("finite_cdf: positions r_j must be even (r = 2u)");
        us[j] = points[j].first / 2;
        if (std::labs(us[j]) >= n)
            throw std::invalid_argument("finite_cdf: |u| < N required");
    }

    size_t dim = m * static_cast<size_t>(w);
    Eigen::MatrixXd kn(dim, dim);
    for (size_t a = 0; a < m; ++a) {
        auto f1 = base_factor_z1(z1, p, n, us[a]);
        for (size_t b = 0; b < m; ++b) {
            auto f2 = base_factor_z2(z2, p, n, us[b]);
            double pre = std::pow(1.0 - p.alpha, 2.0 * static_cast<double>(us[b] - us[a]));
            long base_a = points[a].second + 1;
            long base_b = points[b].second + 1;
            // Two-stage contraction: stage[x1][k] folds the z1 sum, the
            // z2 sum then serves every x2 of the window.
            std::vector<std::vector<cplx>> stage(static_cast<size_t>(w),
                                                 std::vector<cplx>(z2.size(), 0.0));
            for (long xi = 0; xi < w; ++xi) {
                for (size_t j = 0; j < z1.size(); ++j) {
                    cplx t1 = f1[j] * ipow(z1[j], -(base_a + xi));
                    for (size_t k = 0; k < z2.size(); ++k)
                        stage[static_cast<size_t>(xi)][k] += t1 * z1[j] / (z1[j] - z2[k]);
                }
            }
            std::vector<cplx> pow2(z2.size());
            for (long xk = 0; xk < w; ++xk) {
                for (size_t k = 0; k < z2.size(); ++k)
                    pow2[k] = f2[k] * ipow(z2[k], base_b + xk);
                for (long xi = 0; xi < w; ++xi) {
                    cplx acc = 0.0;
                    for (size_t k = 0; k < z2.size(); ++k)
                        acc += stage[static_cast<size_t>(xi)][k] * pow2[k];
                    double val =
                        (pre * acc / (static_cast<double>(cfg.n_c) * cfg.n_c)).real();
                    if (us[b] > us[a])
                        val -= phi_weight(us[a], base_a + xi, us[b], base_b + xk, p, cfg.n_c);
                    kn(static_cast<Eigen::Index>(a * static_cast<size_t>(w)
                                                 + static_cast<size_t>(xi)),
                       static_cast<Eigen::Index>(b * static_cast<size_t>(w)
                                                 + static_cast<size_t>(xk))) = val;
                }
            }
        }
    }
    return kn;
}

double diag_entry(const ModelParams& p, long n, long u, long x, const ContourConfig& cfg) {
    return ktilde(u, x, u, x, p, n, cfg);
}

} // namespace

FiniteCdfResult finite_cdf(const ModelParams& p, long n,
                           const std::vector<std::pair<long, long>>& points,
                           const LatticeWindow& window, const ContourConfig& cfg_in) {
    if (p.gamma_plus * p.gamma_minus >= 1.0)
        throw std::domain_error(
            "finite_cdf: gamma_+*gamma_- >= 1 unsupported (limit laws cover that regime)");
    if (points.empty()) throw std::invalid_argument("finite_cdf: need at least one point");
    ContourConfig cfg = cfg_in.resolved(p);

    Eigen::MatrixXd kn = assemble_kn(p, n, points, window, cfg);
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(kn.rows(), kn.cols()) - kn;
    FiniteCdfResult res;
    res.value = Eigen::PartialPivLU<Eigen::MatrixXd>(a).determinant();
    double worst = 0.0;
    for (const auto& pt : points) {
        long u = pt.first / 2;
        worst = std::max(worst,
                         std::fabs(diag_entry(p, n, u, pt.second + window.x_max + 1, cfg)));
    }
    res.truncation_bound =
        worst * static_cast<double>(window.x_max) * static_cast<double>(points.size());
    return res;
}

FiniteCdfResult modified_cdf(const ModelParams& p, long n,
                             const std::vector<std::pair<long, long>>& points,
                             const LatticeWindow& window, const ContourConfig& cfg) {
    double gg = p.gamma_plus * p.gamma_minus;
    ModelParams plus = p;
    plus.modified = false;
    FiniteCdfResult hi = finite_cdf(plus, n, points, window, cfg);
    std::vector<std::pair<long, long>> shifted = points;
    for (auto& pt : shifted) pt.second -= 1;
    FiniteCdfResult lo = finite_cdf(plus, n, shifted, window, cfg);
    FiniteCdfResult res;
    res.value = (hi.value - gg * lo.value) / (1.0 - gg);
    res.truncation_bound = (hi.truncation_bound + gg * lo.truncation_bound) / (1.0 - gg);
    return res;
}

} // namespace png
