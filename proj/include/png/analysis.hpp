#pragma once

#include "png/painleve.hpp"

#include <functional>
#include <vector>

namespace png {

// Sorted sample with provenance-free statistics helpers.
class EmpiricalSample {
public:
    explicit EmpiricalSample(std::vector<double> values);

    size_t count() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }

    // Right-continuous empirical CDF: fraction of sample <= s.
    double ecdf(double s) const;

private:
    std::vector<double> values_; // ascending
};

// sup_x |ecdf(x) - cdf(x)| over the sample points (both one-sided gaps,
// tie runs handled). cdf must be monotone and continuous.
double ks_distance(const EmpiricalSample& sample,
                   const std::function<double(double)>& cdf);

// Unbiased-variance sample moments; skewness/kurtosis are undefined (NaN)
// for constant samples.
Moments sample_moments(const EmpiricalSample& sample);

} // namespace png
