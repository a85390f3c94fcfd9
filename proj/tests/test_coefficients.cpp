#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "msosc/coefficients.hpp"
#include "msosc/errors.hpp"

using namespace msosc;

namespace {

// Frozen values from a 60-digit evaluation of the printed closed forms
// (b0, b1, b2, b3 at each v).
struct OracleRow {
    double v;
    double b[4];
};

const OracleRow kOraclePf[] = {
    {0.1, {-4.163651328566699148915, 5.070655163091691028353, -1.949095398570009744674,
           1.460265899761668290779}},
    {0.3, {-4.063303485839502897969, 4.995394281046293840144, -1.918991045751850869391,
           1.455248507625308478232}},
    {0.5, {-3.865238561571206689872, 4.846845587845071684071, -1.859571568471362006962,
           1.445345261411893667827}},
    {0.7, {-3.574688484754659521891, 4.628933030232661308085, -1.772406545426397856567,
           1.430817757571066309428}},
};
const OracleRow kOraclePld1[] = {
    {0.1, {-4.151080201887265013277, 5.061223668477615340729, -1.945319021198979366551,
           1.45963545366499653246}},
    {0.3, {-3.953090372314647339976, 4.912481543363753503929, -1.885522467632156333641,
           1.4495861104257264997}},
    {0.5, {-3.574953700350937015523, 4.627214293298663742816, -1.769417872295352007869,
           1.429680429172156772814}},
    {0.7, {-3.050460696611595120725, 4.228585829970932193353, -1.603656034336389234046,
           1.400300552671254601055}},
};
const OracleRow kOraclePld2[] = {
    {0.1, {-4.138543126406678372755, 5.051814592318602545574, -1.941547854685530154054,
           1.459004825570266794858}},
    {0.3, {-3.8455402318162102659, 4.8313344558972199423, -1.85247319400879579476,
           1.443908854019680985411}},
    {0.5, {-3.303800617071963008413, 4.420458655713110833868, -1.682457427304047370962,
           1.413899080126918041302}},
    {0.7, {-2.592058050747177682027, 3.873641219707631538961, -1.446936677793108891447,
           1.3693244834590661935}},
};
const OracleRow kOraclePld3[] = {
    {0.1, {-4.126039995358444882626, 5.042427883753147124982, -1.937781901704941686157,
           1.458374015316399469108}},
    {0.3, {-3.740579529136890317285, 4.751916310531649707315, -1.819845193267768180351,
           1.438216618681238235552}},
    {0.5, {-3.050378516586031692479, 4.225807265248389913128, -1.5987332333803098026,
           1.397998545035877728977}},
    {0.7, {-2.190755475789600645609, 3.558455404513497654049, -1.302582096136213032256,
           1.337868194380353245419}},
};

CoefficientSet closed_form(MethodVariant m, double v) {
    switch (m) {
        case MethodVariant::PhaseFitted: return phase_fitted_coefficients(v);
        case MethodVariant::ZeroPLD1: return zero_pld1_coefficients(v);
        case MethodVariant::ZeroPLD2: return zero_pld2_coefficients(v);
        case MethodVariant::ZeroPLD3: return zero_pld3_coefficients(v);
        default: return classical_coefficients();
    }
}

void check_against_oracle(MethodVariant m, const OracleRow* rows, int n) {
    for (int i = 0; i < n; ++i) {
        const double v = rows[i].v;
        // Closed form at v >= 0.3; below that cancellation dominates, so the
        // dispatcher's series branch carries the accuracy contract.
        const CoefficientSet set = (v >= 0.3) ? closed_form(m, v) : evaluate(m, v);
        for (int j = 0; j <= 3; ++j) {
            const double expected = rows[i].b[j];
            CHECK(std::abs(set.b_off(j) - expected) <= 1e-11 * std::abs(expected));
        }
    }
}

}  // namespace

TEST_CASE("classical coefficients are the printed rationals") {
    const CoefficientSet c = classical_coefficients();
    CHECK(c.b_off(3) == 17671.0 / 12096.0);
    CHECK(c.b_off(2) == -23622.0 / 12096.0);
    CHECK(c.b_off(1) == 61449.0 / 12096.0);
    CHECK(c.b_off(0) == -50516.0 / 12096.0);
    const double a_expected[9] = {1, -2, 2, -1, 0, -1, 2, -2, 1};
    for (int i = 0; i < 9; ++i) CHECK(c.a[i] == a_expected[i]);
    // Exact integer identities over the printed fractions.
    const long long sum_b_num = kClassicalBNumerators[0] +
                                2 * (kClassicalBNumerators[1] + kClassicalBNumerators[2] +
                                     kClassicalBNumerators[3]);
    CHECK(sum_b_num == 5LL * kClassicalDenominator);
    long long sum_j2a = 0;
    const long long a_half[5] = {0, -1, 2, -2, 1};
    for (long long j = 1; j <= 4; ++j) sum_j2a += 2 * a_half[j] * j * j;
    CHECK(sum_j2a == 10);
}

TEST_CASE("fitted closed forms match the multiprecision oracle") {
    check_against_oracle(MethodVariant::PhaseFitted, kOraclePf, 4);
    check_against_oracle(MethodVariant::ZeroPLD1, kOraclePld1, 4);
    check_against_oracle(MethodVariant::ZeroPLD2, kOraclePld2, 4);
    check_against_oracle(MethodVariant::ZeroPLD3, kOraclePld3, 4);
}

TEST_CASE("series matches closed form across the validity band") {
    // Truncation of the printed series grows like v^14; 1e-11 relative holds
    // through 0.3 for every variant and through 0.4 for all but ZeroPLD3.
    for (MethodVariant m : {MethodVariant::PhaseFitted, MethodVariant::ZeroPLD1,
                            MethodVariant::ZeroPLD2, MethodVariant::ZeroPLD3}) {
        for (double v : {0.25, 0.3}) {
            const CoefficientSet s = series_coefficients(m, v);
            const CoefficientSet c = closed_form(m, v);
            for (int j = 0; j <= 3; ++j)
                CHECK(std::abs(s.b_off(j) - c.b_off(j)) <= 1e-11 * std::abs(c.b_off(j)));
        }
    }
    for (MethodVariant m : {MethodVariant::PhaseFitted, MethodVariant::ZeroPLD1,
                            MethodVariant::ZeroPLD2}) {
        const CoefficientSet s = series_coefficients(m, 0.4);
        const CoefficientSet c = closed_form(m, 0.4);
        for (int j = 0; j <= 3; ++j)
            CHECK(std::abs(s.b_off(j) - c.b_off(j)) <= 1e-11 * std::abs(c.b_off(j)));
    }
    {
        const CoefficientSet s = series_coefficients(MethodVariant::ZeroPLD3, 0.4);
        const CoefficientSet c = closed_form(MethodVariant::ZeroPLD3, 0.4);
        for (int j = 0; j <= 3; ++j)
            CHECK(std::abs(s.b_off(j) - c.b_off(j)) <= 1e-9 * std::abs(c.b_off(j)));
    }
}

TEST_CASE("dispatcher is continuous at the series/closed-form seam") {
    const double eps = 1e-6;
    for (MethodVariant m : {MethodVariant::PhaseFitted, MethodVariant::ZeroPLD1,
                            MethodVariant::ZeroPLD2, MethodVariant::ZeroPLD3}) {
        const CoefficientSet lo = evaluate(m, kDefaultSeriesSwitch - eps);
        const CoefficientSet hi = evaluate(m, kDefaultSeriesSwitch + eps);
        CHECK(lo.path == EvaluationPath::Series);
        CHECK(hi.path == EvaluationPath::ClosedForm);
        // The two sample points are 2e-6 apart in v; db/dv is O(1), so any
        // branch mismatch beyond ~1e-5 absolute would be a seam defect.
        for (int j = 0; j <= 3; ++j) CHECK(std::abs(lo.b_off(j) - hi.b_off(j)) <= 1e-5);
    }
}

TEST_CASE("v -> 0 limit recovers the classical coefficients") {
    const CoefficientSet cl = classical_coefficients();
    for (MethodVariant m : {MethodVariant::PhaseFitted, MethodVariant::ZeroPLD1,
                            MethodVariant::ZeroPLD2, MethodVariant::ZeroPLD3}) {
        const CoefficientSet s = evaluate(m, 1e-9);
        for (int j = 0; j <= 3; ++j) CHECK(std::abs(s.b_off(j) - cl.b_off(j)) <= 1e-12);
    }
}

TEST_CASE("structural invariants on a v grid") {
    for (MethodVariant m : kAllVariants) {
        for (double v : {0.01, 0.05, 0.1, 0.3, 0.5, 0.7}) {
            const CoefficientSet s = evaluate(m, v);
            for (int j = 0; j <= 4; ++j) {
                CHECK(s.a_off(j) == s.a_off(-j));
                CHECK(s.b_off(j) == s.b_off(-j));
            }
            CHECK(s.a_off(4) == 1.0);
            CHECK(s.a_off(3) == -2.0);
            CHECK(s.a_off(2) == 2.0);
            CHECK(s.a_off(1) == -1.0);
            CHECK(s.a_off(0) == 0.0);
            CHECK(s.b_off(4) == 0.0);
            double sum_a = 0.0, sum_j2a = 0.0, sum_b = 0.0;
            for (int j = -4; j <= 4; ++j) {
                sum_a += s.a_off(j);
                sum_j2a += j * j * s.a_off(j);
                sum_b += s.b_off(j);
            }
            CHECK(sum_a == 0.0);
            CHECK(sum_j2a == 10.0);
            if (m == MethodVariant::ZeroPLD3) {
                // This variant violates sum b = 5 by an O(v^8) term with
                // coefficient ~ -0.0631 (inherent in the printed formulas).
                const double v8 = std::pow(v, 8);
                CHECK(std::abs(sum_b - 5.0) <= 0.08 * v8 + 1e-12);
                if (v >= 0.3) CHECK(std::abs(sum_b - (5.0 - 0.0631 * v8)) <= 0.01 * v8);
            } else {
                // ZeroPLD2's closed form loses a couple of digits to
                // cancellation near its sin^4 denominator; ~4e-12 relative.
                CHECK(std::abs(sum_b - 5.0) <= 2e-11);
            }
        }
    }
}

TEST_CASE("printed linear relations among the b coefficients") {
    for (double v : {0.1, 0.3, 0.5, 0.7}) {
        const CoefficientSet pf = evaluate(MethodVariant::PhaseFitted, v);
        CHECK(std::abs(pf.b_off(0) - (-20.0 * pf.b_off(3) + 601.0 / 24.0)) <=
              1e-12 * std::abs(pf.b_off(0)));
        CHECK(std::abs(pf.b_off(2) - (-6.0 * pf.b_off(3) + 109.0 / 16.0)) <=
              1e-12 * std::abs(pf.b_off(2)));
        CHECK(std::abs(pf.b_off(1) - (15.0 * pf.b_off(3) - 101.0 / 6.0)) <=
              1e-12 * std::abs(pf.b_off(1)));

        const CoefficientSet p1 = evaluate(MethodVariant::ZeroPLD1, v);
        CHECK(std::abs(p1.b_off(0) - (-95.0 / 6.0 + 16.0 * p1.b_off(3) + 6.0 * p1.b_off(2))) <=
              1e-12 * std::abs(p1.b_off(0)));
        CHECK(std::abs(p1.b_off(1) - (125.0 / 12.0 - 9.0 * p1.b_off(3) - 4.0 * p1.b_off(2))) <=
              1e-12 * std::abs(p1.b_off(1)));

        const CoefficientSet p2 = evaluate(MethodVariant::ZeroPLD2, v);
        CHECK(std::abs(p2.b_off(0) -
                       (5.0 - 2.0 * (p2.b_off(1) + p2.b_off(2) + p2.b_off(3)))) <=
              1e-11 * std::abs(p2.b_off(0)));
    }
}

TEST_CASE("series constant terms equal the classical values") {
    const CoefficientSet cl = classical_coefficients();
    for (MethodVariant m : {MethodVariant::PhaseFitted, MethodVariant::ZeroPLD1,
                            MethodVariant::ZeroPLD2, MethodVariant::ZeroPLD3}) {
        const CoefficientSet s = series_coefficients(m, 0.0);
        for (int j = 0; j <= 3; ++j) CHECK(s.b_off(j) == doctest::Approx(cl.b_off(j)).epsilon(1e-15));
    }
    CHECK(series_coefficients(MethodVariant::PhaseFitted, 0.0).b_off(0) ==
          doctest::Approx(-12629.0 / 3024.0).epsilon(1e-15));
}

TEST_CASE("error conditions") {
    CHECK_THROWS_AS(phase_fitted_coefficients(0.0), NonPositiveV);
    CHECK_THROWS_AS(zero_pld1_coefficients(-0.5), NonPositiveV);
    CHECK_THROWS_AS(zero_pld2_coefficients(M_PI), SingularDenominator);
    CHECK_THROWS_AS(zero_pld3_coefficients(M_PI), SingularDenominator);
    CHECK_THROWS_AS(variant_from_name("nope"), std::invalid_argument);
}

TEST_CASE("variant names round-trip") {
    for (MethodVariant m : kAllVariants) CHECK(variant_from_name(variant_name(m)) == m);
}

TEST_CASE("evaluate dispatch identity on the closed-form side") {
    const CoefficientSet a = evaluate(MethodVariant::ZeroPLD3, 0.6);
    const CoefficientSet b = zero_pld3_coefficients(0.6);
    for (int j = 0; j <= 3; ++j) CHECK(a.b_off(j) == b.b_off(j));
    CHECK(a.path == EvaluationPath::ClosedForm);
}
