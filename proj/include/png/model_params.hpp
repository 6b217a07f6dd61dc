#pragma once

#include <stdexcept>

namespace png {

// Bulk and edge nucleation intensities of the discrete PNG model.
// a_1 = gamma_minus, b_1 = gamma_plus, a_j = b_j = alpha for j >= 2;
// w(i,j) is geometric with parameter a_i b_j. The modified model forces
// w(1,1) = 0, which is what makes gamma_plus*gamma_minus >= 1 admissible.
struct ModelParams {
    double alpha = 0.3;
    double gamma_minus = 0.3;
    double gamma_plus = 0.3;
    bool modified = false;

    void validate() const {
        if (!(alpha > 0.0 && alpha < 1.0))
            throw std::invalid_argument("ModelParams: alpha must be in (0,1)");
        if (gamma_minus < alpha || gamma_plus < alpha)
            throw std::invalid_argument("ModelParams: gamma_+/- must be >= alpha");
        if (gamma_minus >= 1.0 / alpha || gamma_plus >= 1.0 / alpha)
            throw std::invalid_argument("ModelParams: gamma_+/- must be < 1/alpha");
        if (!modified && gamma_plus * gamma_minus >= 1.0)
            throw std::invalid_argument(
                "ModelParams: gamma_+*gamma_- >= 1 requires the modified model");
    }
};

} // namespace png
