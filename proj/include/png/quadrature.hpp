#pragma once

#include <functional>
#include <vector>

namespace png {

struct GaussRule {
    std::vector<double> nodes;   // on (-1, 1)
    std::vector<double> weights;
};

// Gauss-Legendre rule on (-1,1), computed by Newton iteration and cached per n.
const GaussRule& gauss_legendre(int n);

// Nodes/weights mapped to (a, b).
void gauss_on_interval(int n, double a, double b,
                       std::vector<double>& x, std::vector<double>& w);

// Integral of f over [a, b] split into `panels` equal panels with an
// n-point rule on each.
double integrate_panels(const std::function<double(double)>& f,
                        double a, double b, int panels, int n = 20);

} // namespace png
