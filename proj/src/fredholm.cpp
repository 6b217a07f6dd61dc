#include "png/fredholm.hpp"
#include "png/airy.hpp"
#include "png/quadrature.hpp"
#include "png/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace png {

namespace {

constexpr double kLogTail = 46.0; // e^{-46} ~ 1e-20

// Window length so that Airy decay beats an e^{g xi} column growth.
double window_for_growth(double s_min, double growth, double base) {
    double L = base;
    for (; L < 160.0; L += 1.0) {
        double x = s_min + L;
        double dec = x > 1.0 ? (2.0 / 3.0) * x * std::sqrt(x) : 0.0;
        if (dec - growth * (x - s_min) > kLogTail) break;
    }
    return L;
}

double sep_growth(const KernelSpec& spec, const std::vector<double>& taus) {
    double g = 0.0;
    for (double t : taus) {
        switch (spec.variant) {
        case KernelSpec::Variant::Goe2Transition:
            g = std::max(g, -(spec.omega + t));
            break;
        case KernelSpec::Variant::F0Transition:
            g = std::max(g, -(spec.omega_plus - t));
            g = std::max(g, -(spec.omega_minus + t));
            break;
        default:
            break;
        }
    }
    return g;
}

struct LambdaGrid {
    std::vector<double> x, w;
};

// Shared lambda-grid for all K2 blocks of one assembly.
LambdaGrid lambda_grid(double x_min, double c_min) {
    double peak = 0.0, cutoff = 4.0;
    auto lb = [&](double lam) {
        auto dec = [](double v) { return v > 1.0 ? -(2.0 / 3.0) * v * std::sqrt(v) : 0.0; };
        return -c_min * lam + 2.0 * dec(x_min + lam);
    };
    for (double lam = 1.0; lam <= 600.0; lam += 1.0) {
        peak = std::max(peak, lb(lam));
        cutoff = lam;
        if (lb(lam) < peak - kLogTail && lam > -x_min + 2.0) break;
    }
    int panels = std::max(4, static_cast<int>(std::ceil(cutoff / 2.0)));
    LambdaGrid g;
    std::vector<double> px, pw;
    for (int p = 0; p < panels; ++p) {
        gauss_on_interval(24, cutoff * p / panels, cutoff * (p + 1) / panels, px, pw);
        g.x.insert(g.x.end(), px.begin(), px.end());
        g.w.insert(g.w.end(), pw.begin(), pw.end());
    }
    return g;
}

std::vector<double> separable_left(const KernelSpec& spec, const QuadratureGrid::Slot& slot) {
    std::vector<double> v(slot.x.size());
    for (size_t i = 0; i < slot.x.size(); ++i) {
        switch (spec.variant) {
        case KernelSpec::Variant::Goe2Transition:
            v[i] = airy_ai(slot.x[i]);
            break;
        case KernelSpec::Variant::F0Transition:
            v[i] = f0_bscript(spec.omega_plus, slot.tau, slot.x[i]);
            break;
        default:
            v[i] = 0.0;
        }
    }
    return v;
}

std::vector<double> separable_right(const KernelSpec& spec, const QuadratureGrid::Slot& slot) {
    std::vector<double> v(slot.x.size());
    for (size_t i = 0; i < slot.x.size(); ++i) {
        switch (spec.variant) {
        case KernelSpec::Variant::Goe2Transition: {
            double nu = spec.omega + slot.tau;
            if (nu >= 0.0) {
                v[i] = b_transition(slot.x[i], nu);
            } else {
                double t2 = slot.tau, w = spec.omega;
                v[i] = -airy_exp_integral(slot.x[i], -nu)
                       + std::exp((t2 * t2 * t2 + w * w * w) / 3.0 - slot.x[i] * nu);
            }
            break;
        }
        case KernelSpec::Variant::F0Transition:
            v[i] = f0_bscript_prime(spec.omega_minus, slot.tau, slot.x[i]);
            break;
        default:
            v[i] = 0.0;
        }
    }
    return v;
}

} // namespace

size_t QuadratureGrid::total() const {
    size_t n = 0;
    for (const auto& s : slots) n += s.x.size();
    return n;
}

QuadratureGrid make_grid(const KernelSpec& spec,
                         const std::vector<std::pair<double, double>>& points,
                         const GridOptions& opts) {
    if (points.empty() || points.size() > 4)
        throw std::invalid_argument("make_grid: 1..4 points supported");
    double L = opts.cutoff;
    int m = opts.nodes;
    if (opts.adapt && spec.variant != KernelSpec::Variant::Brownian) {
        double s_min = points[0].second;
        std::vector<double> taus;
        for (const auto& p : points) {
            s_min = std::min(s_min, p.second);
            taus.push_back(p.first);
        }
        L = window_for_growth(s_min, sep_growth(spec, taus), opts.cutoff);
        if (spec.variant == KernelSpec::Variant::F0Transition) {
            double sum = spec.omega_plus + spec.omega_minus;
            if (sum > 0.0 && sum < 2.0)
                L = std::max(L, std::min(160.0, (16.0 - std::log(sum)) / sum));
        }
        m = std::max(m, static_cast<int>(std::ceil(4.0 * L)));
    }
    QuadratureGrid g;
    for (const auto& p : points) {
        QuadratureGrid::Slot slot;
        slot.tau = p.first;
        slot.s = p.second;
        gauss_on_interval(m, p.second, p.second + L, slot.x, slot.w);
        g.slots.push_back(std::move(slot));
    }
    return g;
}

DiscretizedOperator assemble(const KernelSpec& spec, const QuadratureGrid& grid) {
    size_t n = grid.total();
    DiscretizedOperator op;
    op.grid = grid;
    op.spec = spec;
    op.m.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));

    if (spec.variant == KernelSpec::Variant::Brownian) {
        size_t row = 0;
        for (const auto& sa : grid.slots) {
            for (size_t i = 0; i < sa.x.size(); ++i, ++row) {
                size_t col = 0;
                for (const auto& sb : grid.slots) {
                    for (size_t k = 0; k < sb.x.size(); ++k, ++col) {
                        double kv = brownian_kernel(sa.tau, sa.x[i], sb.tau, sb.x[k],
                                                    spec.beta_edge);
                        op.m(row, col) = -std::sqrt(sa.w[i]) * kv * std::sqrt(sb.w[k]);
                    }
                }
            }
        }
        return op;
    }

    // Airy-type kernels: shared lambda grid + per-node Airy cache.
    double x_min = grid.slots[0].x[0], c_min = 0.0;
    for (const auto& sa : grid.slots) {
        x_min = std::min(x_min, sa.x[0]);
        for (const auto& sb : grid.slots) c_min = std::min(c_min, sa.tau - sb.tau);
    }
    LambdaGrid lg = lambda_grid(x_min, c_min);
    size_t q = lg.x.size();

    std::vector<std::vector<double>> ai_cache(n, std::vector<double>(q));
    {
        size_t row = 0;
        for (const auto& sa : grid.slots)
            for (double xi : sa.x) {
                for (size_t j = 0; j < q; ++j) ai_cache[row][j] = airy_ai(xi + lg.x[j]);
                ++row;
            }
    }

    std::vector<std::vector<double>> sep_l, sep_r;
    for (const auto& slot : grid.slots) {
        sep_l.push_back(separable_left(spec, slot));
        sep_r.push_back(separable_right(spec, slot));
    }
    double sep_coeff = 1.0;
    if (spec.variant == KernelSpec::Variant::F0Transition)
        sep_coeff = spec.omega_plus + spec.omega_minus;

    size_t row0 = 0;
    for (size_t a = 0; a < grid.slots.size(); ++a) {
        const auto& sa = grid.slots[a];
        size_t col0 = 0;
        for (size_t b = 0; b < grid.slots.size(); ++b) {
            const auto& sb = grid.slots[b];
            double c = sa.tau - sb.tau;
            std::vector<double> ew(q);
            for (size_t j = 0; j < q; ++j) ew[j] = lg.w[j] * std::exp(-c * lg.x[j]);
            for (size_t i = 0; i < sa.x.size(); ++i) {
                for (size_t k = 0; k < sb.x.size(); ++k) {
                    double acc = 0.0;
                    const auto& ra = ai_cache[row0 + i];
                    const auto& rb = ai_cache[col0 + k];
                    for (size_t j = 0; j < q; ++j) acc += ew[j] * ra[j] * rb[j];
                    if (c < 0.0) acc -= airy_product_bilateral(-c, sa.x[i], sb.x[k]);
                    if (spec.variant != KernelSpec::Variant::ExtendedAiry)
                        acc += sep_coeff * sep_l[a][i] * sep_r[b][k];
                    op.m(static_cast<Eigen::Index>(row0 + i),
                         static_cast<Eigen::Index>(col0 + k)) =
                        -std::sqrt(sa.w[i]) * acc * std::sqrt(sb.w[k]);
                }
            }
            col0 += sb.x.size();
        }
        row0 += sa.x.size();
    }
    return op;
}

DiscretizedOperator assemble_functor(
    const std::function<double(double, double, double, double)>& kernel,
    const QuadratureGrid& grid) {
    size_t n = grid.total();
    DiscretizedOperator op;
    op.grid = grid;
    op.m.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    size_t row = 0;
    for (const auto& sa : grid.slots)
        for (size_t i = 0; i < sa.x.size(); ++i, ++row) {
            size_t col = 0;
            for (const auto& sb : grid.slots)
                for (size_t k = 0; k < sb.x.size(); ++k, ++col)
                    op.m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
                        -std::sqrt(sa.w[i]) * kernel(sa.tau, sa.x[i], sb.tau, sb.x[k])
                        * std::sqrt(sb.w[k]);
        }
    return op;
}

double det1p(const DiscretizedOperator& op) {
    if (!op.m.allFinite()) throw std::runtime_error("det1p: non-finite operator entries");
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(op.m.rows(), op.m.cols()) + op.m;
    return Eigen::PartialPivLU<Eigen::MatrixXd>(a).determinant();
}

double one_point_cdf(const KernelSpec& spec, double s, double tau, const GridOptions& opts) {
    if (spec.variant == KernelSpec::Variant::F0Transition &&
        spec.omega_plus + spec.omega_minus <= 0.0)
        throw std::domain_error(
            "one_point_cdf: F0 spec needs omega_+ + omega_- > 0; use f0_point");
    return joint_cdf(spec, {{tau, s}}, opts);
}

double joint_cdf(const KernelSpec& spec,
                 const std::vector<std::pair<double, double>>& points,
                 const GridOptions& opts) {
    QuadratureGrid grid = make_grid(spec, points, opts);
    return det1p(assemble(spec, grid));
}

RankOneAB rank_one_ab(double s, double omega, const GridOptions& opts) {
    GridOptions local = opts;
    if (opts.adapt) {
        local.cutoff = window_for_growth(s, std::max(0.0, -omega), opts.cutoff);
        local.nodes = std::max(opts.nodes, static_cast<int>(std::ceil(4.0 * local.cutoff)));
    }
    KernelSpec airy_spec = KernelSpec::extended_airy();
    QuadratureGrid grid = make_grid(airy_spec, {{0.0, s}}, local);
    DiscretizedOperator op = assemble(airy_spec, grid);

    const auto& slot = grid.slots[0];
    size_t n = slot.x.size();
    Eigen::MatrixXd t = -op.m; // W^{1/2} K2 W^{1/2}
    Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(op.m.rows(), op.m.cols()) - t;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(lhs);

    Eigen::VectorXd bw(n), aw(n);
    for (size_t i = 0; i < n; ++i) {
        double sw = std::sqrt(slot.w[i]);
        bw(static_cast<Eigen::Index>(i)) = sw * b_transition(slot.x[i], omega);
        aw(static_cast<Eigen::Index>(i)) = sw * airy_ai(slot.x[i]);
    }
    Eigen::VectorXd y = lu.solve(bw);

    RankOneAB out;
    out.f2 = lu.determinant();
    out.a = 1.0 - aw.dot(y);
    // Nystrom extension of (1 - K2)^{-1} B back to the threshold point s.
    double b = b_transition(s, omega);
    for (size_t k = 0; k < n; ++k)
        b += std::sqrt(slot.w[k]) * airy_product_integral(0.0, s, slot.x[k])
             * y(static_cast<Eigen::Index>(k));
    out.b = b;
    out.cdf = out.f2 * out.a;
    return out;
}

double f0_point(double omega_plus, double omega_minus, double s,
                const PainleveTable* table, double tau, const GridOptions& opts) {
    double sum = omega_plus + omega_minus;
    if (sum <= 0.0) {
        if (!table)
            throw std::domain_error(
                "f0_point: omega_+ + omega_- <= 0 needs the painleve table route");
        // Analytic continuation: the painleve-route expression is entire in
        // (w+, w-); the tau shift maps to (w+ - tau, w- + tau).
        return f0_cdf(*table, s, omega_plus - tau, omega_minus + tau);
    }
    KernelSpec spec = KernelSpec::f0(omega_plus, omega_minus);
    auto det_at = [&](double sv) { return joint_cdf(spec, {{tau, sv}}, opts); };
    const double h = 1e-3;
    double d0 = det_at(s), dp = det_at(s + h), dm = det_at(s - h);
    return d0 + (dp - dm) / (2.0 * h) / sum;
}

double norm_cdf(double x) { return 0.5 * std::erfc(-x / M_SQRT2); }

namespace {

// Chained edge integrals, left-edge orientation: beta_1 < ... < beta_m < edge.
double gaussian_joint_left(const std::vector<std::pair<double, double>>& pts,
                           double edge) {
    size_t m = pts.size();
    for (size_t j = 0; j + 1 < m; ++j)
        if (!(pts[j].first < pts[j + 1].first))
            throw std::domain_error("gaussian_joint: betas must be strictly increasing");
    if (!(pts.back().first < edge))
        throw std::domain_error("gaussian_joint: betas must lie below the edge point");

    if (m == 1) return norm_cdf(pts[0].second / std::sqrt(edge - pts[0].first));

    // g_k(xi_{k+1}) tabulated on a grid; g_1 is a closed-form normal CDF.
    const double lo = -14.0, hi = 14.0, step = 0.01;
    size_t gn = static_cast<size_t>((hi - lo) / step) + 1;
    std::vector<double> g(gn), gnext(gn);
    {
        double v = pts[1].first - pts[0].first;
        for (size_t i = 0; i < gn; ++i) {
            double xi = lo + step * static_cast<double>(i);
            g[i] = norm_cdf((pts[0].second - xi) / std::sqrt(v));
        }
    }
    for (size_t k = 1; k + 1 < m; ++k) {
        double v = pts[k + 1].first - pts[k].first;
        double sk = pts[k].second;
        for (size_t i = 0; i < gn; ++i) {
            double xi_next = lo + step * static_cast<double>(i);
            double acc = 0.0;
            for (size_t j = 0; j < gn; ++j) {
                double xi = lo + step * static_cast<double>(j);
                if (xi > sk) break;
                double wgt = (j == 0 || xi + step > sk) ? 0.5 : 1.0;
                acc += wgt * std::exp(-(xi_next - xi) * (xi_next - xi) / (2.0 * v)) * g[j];
            }
            gnext[i] = acc * step / std::sqrt(2.0 * M_PI * v);
        }
        g.swap(gnext);
    }
    double v = edge - pts[m - 1].first;
    double sm = pts[m - 1].second;
    double acc = 0.0;
    for (size_t j = 0; j < gn; ++j) {
        double xi = lo + step * static_cast<double>(j);
        if (xi > sm) break;
        double wgt = (j == 0 || xi + step > sm) ? 0.5 : 1.0;
        acc += wgt * std::exp(-xi * xi / (2.0 * v)) * g[j];
    }
    return acc * step / std::sqrt(2.0 * M_PI * v);
}

} // namespace

double gaussian_joint(const std::vector<std::pair<double, double>>& points,
                      double beta_edge, EdgeSide side) {
    if (points.empty() || points.size() > 4)
        throw std::invalid_argument("gaussian_joint: 1..4 points supported");
    // Drop marginalized slots.
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : points)
        if (std::isfinite(p.second)) pts.push_back(p);
    if (pts.empty()) return 1.0;
    if (side == EdgeSide::Right) {
        std::vector<std::pair<double, double>> mirrored;
        for (auto it = pts.rbegin(); it != pts.rend(); ++it)
            mirrored.push_back({-it->first, it->second});
        return gaussian_joint_left(mirrored, -beta_edge);
    }
    return gaussian_joint_left(pts, beta_edge);
}

double beta_c_product_cdf(double s, const ModelParams& params) {
    if (!(params.gamma_plus * params.gamma_minus > 1.0))
        throw std::domain_error("beta_c_product_cdf: requires gamma_+*gamma_- > 1");
    CriticalPoints cp = critical_points(params);
    double beta_c = *cp.beta_c;
    double v1 = cp.beta_minus - beta_c;
    double ratio = d_g_coeff(params.gamma_minus, params.alpha)
                   / d_g_coeff(params.gamma_plus, params.alpha);
    double v2 = beta_c - cp.beta_plus;
    return norm_cdf(s / std::sqrt(v1)) * norm_cdf(s * ratio / std::sqrt(v2));
}

} // namespace png
