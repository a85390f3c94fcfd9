#ifndef MSOSC_COEFFICIENTS_HPP
#define MSOSC_COEFFICIENTS_HPP

#include <array>
#include <cstdint>
#include <string>

namespace msosc {

/// The five eight-step symmetric methods: the constant-coefficient
/// Quinlan-Tremaine scheme, its phase-fitted variant, and the variants
/// nullifying the phase-lag together with its first r derivatives.
enum class MethodVariant { Classical, PhaseFitted, ZeroPLD1, ZeroPLD2, ZeroPLD3 };

enum class EvaluationPath { ClosedForm, Series };

constexpr std::array<MethodVariant, 5> kAllVariants = {
    MethodVariant::Classical, MethodVariant::PhaseFitted, MethodVariant::ZeroPLD1,
    MethodVariant::ZeroPLD2, MethodVariant::ZeroPLD3};

std::string variant_name(MethodVariant variant);
MethodVariant variant_from_name(const std::string& name);

/// Coefficients of one method instance at one fit parameter v = omega*h.
/// Arrays are indexed by stencil offset -4..+4 through the *_off accessors;
/// a is the same for every variant, only b depends on v.
struct CoefficientSet {
    std::array<double, 9> a{};
    std::array<double, 9> b{};
    double v = 0.0;
    MethodVariant variant = MethodVariant::Classical;
    EvaluationPath path = EvaluationPath::ClosedForm;

    double a_off(int j) const { return a[static_cast<std::size_t>(j + 4)]; }
    double b_off(int j) const { return b[static_cast<std::size_t>(j + 4)]; }
};

/// Exact integer numerators of the classical b coefficients over
/// kClassicalDenominator, offsets 0..3; used by the exact order tests.
constexpr std::int64_t kClassicalDenominator = 12096;
constexpr std::array<std::int64_t, 4> kClassicalBNumerators = {-50516, 61449, -23622, 17671};

CoefficientSet classical_coefficients();

/// Closed-form branches. All throw NonPositiveV for v <= 0; the two variants
/// whose denominators contain sin v (ZeroPLD2) or cos v + 1 (ZeroPLD3) throw
/// SingularDenominator near those zeros.
CoefficientSet phase_fitted_coefficients(double v);
CoefficientSet zero_pld1_coefficients(double v);
CoefficientSet zero_pld2_coefficients(double v);
CoefficientSet zero_pld3_coefficients(double v);

/// Printed Taylor expansions through the v^12 term. Valid for |v| below
/// roughly 0.8; callers enforce the radius.
CoefficientSet series_coefficients(MethodVariant variant, double v);

/// Series/closed-form crossover. Truncation of the v^12 series is ~4e-9
/// relative at 0.25 while the closed forms have lost several digits to
/// cancellation well below 0.1.
inline constexpr double kDefaultSeriesSwitch = 0.25;

/// Branch dispatcher: series below v_switch, closed form at and above it.
CoefficientSet evaluate(MethodVariant variant, double v,
                        double v_switch = kDefaultSeriesSwitch);

}  // namespace msosc

#endif
