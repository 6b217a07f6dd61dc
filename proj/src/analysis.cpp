#include "png/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace png {

EmpiricalSample::EmpiricalSample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("EmpiricalSample: empty sample");
    std::sort(values_.begin(), values_.end());
}

double EmpiricalSample::ecdf(double s) const {
    auto it = std::upper_bound(values_.begin(), values_.end(), s);
    return static_cast<double>(it - values_.begin()) / static_cast<double>(values_.size());
}

double ks_distance(const EmpiricalSample& sample,
                   const std::function<double(double)>& cdf) {
    const auto& v = sample.values();
    double n = static_cast<double>(v.size());
    double d = 0.0;
    // walk runs of tied values: the empirical CDF jumps from lo/n to hi/n
    size_t i = 0;
    while (i < v.size()) {
        size_t j = i;
        while (j + 1 < v.size() && v[j + 1] == v[i]) ++j;
        double f = cdf(v[i]);
        d = std::max(d, std::fabs(static_cast<double>(j + 1) / n - f));
        d = std::max(d, std::fabs(static_cast<double>(i) / n - f));
        i = j + 1;
    }
    return d;
}

Moments sample_moments(const EmpiricalSample& sample) {
    const auto& v = sample.values();
    if (v.size() < 4) throw std::invalid_argument("sample_moments: need count >= 4");
    double n = static_cast<double>(v.size());
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= n;
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double x : v) {
        double d = x - mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    double var = m2 / (n - 1.0);
    double sd = std::sqrt(var);
    if (sd == 0.0) {
        double nan = std::numeric_limits<double>::quiet_NaN();
        return {mean, 0.0, nan, nan};
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    return {mean, sd, m3 / std::pow(m2, 1.5), m4 / (m2 * m2) - 3.0};
}

} // namespace png
