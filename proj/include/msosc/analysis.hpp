#pragma once

#include <array>
#include <complex>

#include "msosc/coefficients.hpp"

namespace msosc {

struct PhaseLagValue {
    double v = 0.0;
    double pl = 0.0;
    int derivative_order = 0;
};

struct StabilityReport {
    MethodVariant variant;
    double s0 = 0.0;
    double interval_end = 0.0;  // s0^2
    double scan_step = 0.0;
    double bisect_tol = 0.0;
};

// A_j(s) = a_j + s^2 b_j for j = 0..4; the degree-8 characteristic polynomial
// is assembled from these by symmetry.
std::array<double, 5> characteristic_coefficients(const CoefficientSet& coeffs, double s);

// Ratio of Eq-(7) form: [A0 + sum_j 2 A_j cos(jv)] / [sum_j 2 j^2 A_j].
PhaseLagValue phase_lag(const CoefficientSet& coeffs, double v);

// d^order/du^order at u = v of u -> phase_lag(coeffs fixed at fit point v, u).
// The coefficients are frozen at the fit point; differentiating along the
// fitted family instead is identically zero for every fitted variant and
// cannot express the paper's PL'(v) = 0 conditions.
PhaseLagValue phase_lag_derivative(MethodVariant variant, double v, int order);

int algebraic_order(const CoefficientSet& coeffs);

std::array<std::complex<double>, 8> characteristic_roots(MethodVariant variant, double s);

inline constexpr double kStabilityScanStep = 1e-3;
inline constexpr double kStabilityBisectTol = 1e-6;
inline constexpr double kStabilityScanMax = 3.5;
inline constexpr double kUnitCircleTol = 1e-9;

StabilityReport periodicity_interval(MethodVariant variant);

}  // namespace msosc
