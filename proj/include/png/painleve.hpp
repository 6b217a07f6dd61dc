#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace png {

// Hastings-McLeod solution of Painleve II and the distribution columns
// built from it. Grid is uniform and descending from s0 to s_min.
struct PainleveTable {
    double s0 = 8.0;
    double s_min = -10.0;
    double step = 5e-4;

    std::vector<double> s;    // descending
    std::vector<double> q;    // Hastings-McLeod q(s)
    std::vector<double> qp;   // q'(s)
    std::vector<double> u;    // int_s^inf q^2
    std::vector<double> v;    // (u^2 - q^2)/2
    std::vector<double> e;    // exp(-int_s^inf q)
    std::vector<double> f2;   // GUE Tracy-Widom CDF
    std::vector<double> f12;  // GOE^2 CDF = e * f2

    size_t size() const { return s.size(); }
    bool covers(double sv) const { return sv >= s_min - 1e-12 && sv <= s0 + 1e-12; }
    // Linear interpolation of a column at sv; throws if out of grid.
    double interp(const std::vector<double>& col, double sv) const;
};

// Integrate q'' = s q + 2 q^3 downward from (Ai(s0), Ai'(s0)) with a fixed
// RK4 step, accumulating u, e, F2, F1^2 by the trapezoid rule. Throws on
// blow-up (|q| > 1e6).
PainleveTable solve_q(double s0 = 8.0, double s_min = -10.0, double step = 5e-4);

// Scalar coefficient data at one s (interpolated from the table; for
// s > s0 the analytic Airy tail is used).
struct PointCoeffs {
    double s, q, qp, u, v, e, f2;
};
PointCoeffs coeffs_at(const PainleveTable& table, double s);

// Baik-Rains pair (a, b)(s, omega) at one s, with the omega-derivatives
// from the ODE right-hand side. The omega-integration runs forward from
// the omega = 0 data for omega <= 2 and backward from the large-omega
// asymptotics otherwise (forward integration is exponentially unstable
// against the e^{omega^3/3 - s omega} mode for large positive omega).
struct ABPoint {
    double a, b, da, db;
};
ABPoint ab_point(const PointCoeffs& c, double omega, double step = 1e-3);

// Whole-grid columns a(., omega), b(., omega); |omega| <= 2.
struct ABColumns {
    double omega = 0.0;
    std::vector<double> a, b;
};
ABColumns baik_rains_ab(const PainleveTable& table, double omega, double step = 1e-3);

// F(s) = F2(s) a(s, omega); omega = 0 gives F1(s)^2.
double transition_cdf(const PainleveTable& table, double s, double omega);

// One-point law at the F0 point, Prop-5.1 route:
//   a+ a- F2 + (a+ a- - b+ b-) u F2 / (w+ + w-),
// with the w+ + w- = 0 case taken as the diagonal limit.
double f0_cdf(const PainleveTable& table, double s, double omega_plus, double omega_minus);

// Taylor coefficients of the transition mean about tau = 0.
std::array<double, 4> mean_small_tau_series(const PainleveTable& table);

enum class MeanRegime { LargePositive, LargeNegative };
// -1.77109 + 1/tau for tau >= 2; tau^2 for tau <= -2.
double mean_asymptotic(double tau, MeanRegime regime);

// Mean of the full transition law at any tau (positive tau via the
// backward-stabilized a; negative tau via a = b(s,-tau) e^{tau^3/3 - s tau}
// on an extended grid around s ~ tau^2).
double transition_mean(const PainleveTable& table, double tau);

struct Moments {
    double mean, sd, skewness, excess_kurtosis;
};
// Moments of a CDF sampled on an ascending grid, via tail integrals.
Moments moments(const std::vector<double>& s_ascending, const std::vector<double>& cdf);
// Moments of a table column (descending storage handled internally).
Moments column_moments(const PainleveTable& table, const std::vector<double>& col);

} // namespace png
