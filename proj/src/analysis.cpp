#include "msosc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>

#include "msosc/errors.hpp"

namespace msosc {

namespace {

double phase_lag_frozen(const CoefficientSet& coeffs, double u) {
    // Coefficients stay at their fit point; only the test frequency u moves.
    // Long double keeps the heavily cancelling numerator meaningful at small u.
    const long double ul = u;
    long double num = coeffs.a_off(0) + ul * ul * coeffs.b_off(0);
    long double den = 0.0L;
    for (int j = 1; j <= 4; ++j) {
        const long double aj = coeffs.a_off(j) + ul * ul * coeffs.b_off(j);
        num += 2.0L * aj * cosl(j * ul);
        den += 2.0L * j * j * aj;
    }
    if (fabsl(den) < 1e-12L) throw DegenerateDenominator("phase_lag: vanishing denominator");
    return static_cast<double>(num / den);
}

double central_difference(const std::function<double(double)>& g, double v, int order,
                          double delta) {
    switch (order) {
        case 1: return (g(v + delta) - g(v - delta)) / (2.0 * delta);
        case 2: return (g(v + delta) - 2.0 * g(v) + g(v - delta)) / (delta * delta);
        case 3:
            return (g(v + 2.0 * delta) - 2.0 * g(v + delta) + 2.0 * g(v - delta) -
                    g(v - 2.0 * delta)) /
                   (2.0 * delta * delta * delta);
        default: throw std::invalid_argument("phase_lag_derivative: order must be 1, 2 or 3");
    }
}

// Aberth-Ehrlich simultaneous iteration on a monic real polynomial.
std::array<std::complex<double>, 8> aberth_roots(const std::array<double, 9>& c) {
    using C = std::complex<double>;
    auto eval = [&c](C z, C& p, C& dp) {
        p = c[8];
        dp = 0.0;
        for (int k = 7; k >= 0; --k) {
            dp = dp * z + p;
            p = p * z + c[static_cast<std::size_t>(k)];
        }
    };
    std::array<C, 8> z;
    for (int k = 0; k < 8; ++k) {
        const double t = 2.0 * M_PI * k / 8.0 + 0.45;  // fixed phase offset: deterministic
        z[static_cast<std::size_t>(k)] = C(std::cos(t), std::sin(t));
    }
    for (int iter = 0; iter < 500; ++iter) {
        double max_step = 0.0;
        for (int k = 0; k < 8; ++k) {
            C p, dp;
            eval(z[static_cast<std::size_t>(k)], p, dp);
            if (p == C(0.0)) continue;
            const C ratio = (dp != C(0.0)) ? p / dp : C(1e-3);
            C sum = 0.0;
            for (int j = 0; j < 8; ++j)
                if (j != k)
                    sum += 1.0 / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
            const C w = ratio / (1.0 - ratio * sum);
            z[static_cast<std::size_t>(k)] -= w;
            max_step = std::max(max_step, std::abs(w));
        }
        if (max_step < 1e-14) return z;
    }
    // Accept if residuals are tiny even when corrections stalled (multiple roots).
    double max_res = 0.0;
    for (const C& zi : z) {
        C p, dp;
        eval(zi, p, dp);
        max_res = std::max(max_res, std::abs(p));
    }
    if (max_res < 1e-10) return z;
    throw RootFindFailure("aberth_roots: no convergence after 500 iterations");
}

double max_root_modulus(MethodVariant variant, double s) {
    const auto roots = characteristic_roots(variant, s);
    double m = 0.0;
    for (const auto& r : roots) m = std::max(m, std::abs(r));
    return m;
}

}  // namespace

std::array<double, 5> characteristic_coefficients(const CoefficientSet& coeffs, double s) {
    std::array<double, 5> A{};
    for (int j = 0; j <= 4; ++j)
        A[static_cast<std::size_t>(j)] = coeffs.a_off(j) + s * s * coeffs.b_off(j);
    return A;
}

PhaseLagValue phase_lag(const CoefficientSet& coeffs, double v) {
    return PhaseLagValue{v, phase_lag_frozen(coeffs, v), 0};
}

PhaseLagValue phase_lag_derivative(MethodVariant variant, double v, int order) {
    const CoefficientSet coeffs = evaluate(variant, v);
    const std::function<double(double)> g = [&coeffs](double u) {
        return phase_lag_frozen(coeffs, u);
    };
    // Step grows with the derivative order: FD noise amplifies like delta^-order.
    const double base = (order == 1) ? 1e-4 : (order == 2) ? 1e-3 : 3e-3;
    const double delta = base * std::max(1.0, v);
    const double coarse = central_difference(g, v, order, delta);
    const double fine = central_difference(g, v, order, delta / 2.0);
    return PhaseLagValue{v, (4.0 * fine - coarse) / 3.0, order};
}

int algebraic_order(const CoefficientSet& coeffs) {
    // Operator residual on x^m over a unit grid centered at the stencil
    // midpoint: T_m = sum_j a_j j^m - m(m-1) sum_j b_j j^(m-2).  Odd m vanish
    // exactly by symmetry; the order is (first failing m) - 2.
    if (coeffs.variant == MethodVariant::Classical) {
        // Exact integer arithmetic over the printed rationals:
        // 12096 * sum_j a_j j^m  vs  m(m-1) * [b0num 0^(m-2) + 2 sum b_num j^(m-2)].
        const std::array<std::int64_t, 5> a = {0, -1, 2, -2, 1};
        for (int m = 2; m <= 30; m += 2) {
            std::int64_t lhs = 0, s = (m == 2) ? kClassicalBNumerators[0] : 0;
            for (std::int64_t j = 1; j <= 4; ++j) {
                std::int64_t jm2 = 1;
                for (int k = 0; k < m - 2; ++k) jm2 *= j;
                lhs += 2 * a[static_cast<std::size_t>(j)] * jm2 * j * j;
                if (j <= 3) s += 2 * kClassicalBNumerators[static_cast<std::size_t>(j)] * jm2;
            }
            if (lhs * 12096 != static_cast<std::int64_t>(m) * (m - 1) * s) return m - 2;
        }
        return 28;
    }
    for (int m = 2; m <= 30; ++m) {
        long double t = 0.0L, scale = 0.0L;
        for (int j = -4; j <= 4; ++j) {
            const long double jm = (m == 0) ? 1.0L : powl(static_cast<long double>(j), m);
            const long double aj = coeffs.a[static_cast<std::size_t>(j + 4)];
            t += aj * jm;
            scale += fabsl(aj * jm);
            if (m >= 2) {
                const long double jm2 = (m == 2 && j == 0)
                                            ? 1.0L
                                            : powl(static_cast<long double>(j), m - 2);
                const long double bj = coeffs.b[static_cast<std::size_t>(j + 4)];
                t -= static_cast<long double>(m) * (m - 1) * bj * jm2;
                scale += static_cast<long double>(m) * (m - 1) * fabsl(bj * jm2);
            }
        }
        if (scale == 0.0L) continue;
        if (fabsl(t) / scale > 1e-10L) return m - 2;
    }
    return 28;
}

std::array<std::complex<double>, 8> characteristic_roots(MethodVariant variant, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("characteristic_roots: s must be > 0");
    const CoefficientSet coeffs = evaluate(variant, s);  // fit parameter tied to s
    const auto A = characteristic_coefficients(coeffs, s);
    std::array<double, 9> c{};
    c[4] = A[0];
    for (int j = 1; j <= 4; ++j) {
        c[static_cast<std::size_t>(4 + j)] = A[static_cast<std::size_t>(j)];
        c[static_cast<std::size_t>(4 - j)] = A[static_cast<std::size_t>(j)];
    }
    // A4 = a4 + s^2 b4 = 1: the polynomial is monic as required by the solver.
    return aberth_roots(c);
}

StabilityReport periodicity_interval(MethodVariant variant) {
    const double limit = 1.0 + kUnitCircleTol;
    double lo = 0.0, hi = 0.0;
    bool found = false;
    for (double s = kStabilityScanStep; s <= kStabilityScanMax; s += kStabilityScanStep) {
        double m;
        try {
            m = max_root_modulus(variant, s);
        } catch (const SingularDenominator&) {
            continue;
        }
        if (m > limit) {
            lo = s - kStabilityScanStep;
            hi = s;
            found = true;
            break;
        }
    }
    double s0 = kStabilityScanMax;
    if (found) {
        while (hi - lo > kStabilityBisectTol) {
            const double mid = 0.5 * (lo + hi);
            double m;
            try {
                m = max_root_modulus(variant, mid);
            } catch (const SingularDenominator&) {
                hi = mid;
                continue;
            }
            (m > limit ? hi : lo) = mid;
        }
        s0 = 0.5 * (lo + hi);
    }
    return StabilityReport{variant, s0, s0 * s0, kStabilityScanStep, kStabilityBisectTol};
}

}  // namespace msosc
