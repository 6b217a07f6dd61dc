#include "png/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace png {

namespace {

GaussRule compute_rule(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev initial guess, Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        r.nodes[i] = x;
        r.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return r;
}

std::map<int, GaussRule> g_rules;
std::mutex g_rules_mutex;

} // namespace

const GaussRule& gauss_legendre(int n) {
    std::lock_guard<std::mutex> lock(g_rules_mutex);
    auto it = g_rules.find(n);
    if (it == g_rules.end()) it = g_rules.emplace(n, compute_rule(n)).first;
    return it->second;
}

void gauss_on_interval(int n, double a, double b,
                       std::vector<double>& x, std::vector<double>& w) {
    const GaussRule& r = gauss_legendre(n);
    x.resize(n);
    w.resize(n);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        x[i] = mid + half * r.nodes[i];
        w[i] = half * r.weights[i];
    }
}

double integrate_panels(const std::function<double(double)>& f,
                        double a, double b, int panels, int n) {
    const GaussRule& r = gauss_legendre(n);
    double total = 0.0;
    double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * h;
        double mid = lo + 0.5 * h, half = 0.5 * h;
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += r.weights[i] * f(mid + half * r.nodes[i]);
        total += half * acc;
    }
    return total;
}

} // namespace png
