#include "msosc/coefficients.hpp"

#include <cmath>
#include <stdexcept>

#include "msosc/errors.hpp"

namespace msosc {

namespace {

using ld = long double;

constexpr double kSingularGuard = 1e-4;

// a is shared by all five methods: a_{+-4}=1, a_{+-3}=-2, a_{+-2}=2, a_{+-1}=-1, a_0=0.
constexpr std::array<double, 9> kA = {1, -2, 2, -1, 0, -1, 2, -2, 1};

CoefficientSet make_set(MethodVariant variant, double v, EvaluationPath path, ld b0, ld b1,
                        ld b2, ld b3) {
    CoefficientSet set;
    set.a = kA;
    set.v = v;
    set.variant = variant;
    set.path = path;
    const std::array<double, 4> half = {static_cast<double>(b0), static_cast<double>(b1),
                                        static_cast<double>(b2), static_cast<double>(b3)};
    for (int j = 0; j <= 3; ++j) {
        set.b[static_cast<std::size_t>(4 + j)] = half[static_cast<std::size_t>(j)];
        set.b[static_cast<std::size_t>(4 - j)] = half[static_cast<std::size_t>(j)];
    }
    set.b[0] = set.b[8] = 0.0;  // explicit: b_{+-4} = 0
    return set;
}

// Taylor expansions printed for each method, coefficients of v^0..v^12 (even
// powers only) for b_0..b_3. The constant terms are the classical values and
// the v^2 terms share the factor 45767 across all variants.
struct SeriesTable {
    std::array<std::array<ld, 7>, 4> c;  // [b index][power/2]
};

const SeriesTable kSeriesPhaseFitted = {{{
    {-12629.0L / 3024, 45767.0L / 36288, -164627.0L / 2395008, 520367.0L / 792529920,
     -76873.0L / 4483454976, 9190171.0L / 160059342643200.0L, 6662921.0L / 1703031405723648.0L},
    {20483.0L / 4032, -45767.0L / 48384, 164627.0L / 3193344, -520367.0L / 1056706560,
     76873.0L / 5977939968, -9190171.0L / 213412456857600.0L, -6662921.0L / 2270708540964864.0L},
    {-3937.0L / 2016, 45767.0L / 120960, -164627.0L / 7983360, 520367.0L / 2641766400.0L,
     -76873.0L / 14944849920.0L, 9190171.0L / 533531142144000.0L,
     6662921.0L / 5676771352412160.0L},
    {17671.0L / 12096, -45767.0L / 725760, 164627.0L / 47900160, -520367.0L / 15850598400.0L,
     76873.0L / 89669099520.0L, -9190171.0L / 3201186852864000.0L,
     -6662921.0L / 34060628114472960.0L},
}}};

const SeriesTable kSeriesZeroPld1 = {{{
    {-12629.0L / 3024, 45767.0L / 18144, -11483491.0L / 23950080.0L,
     112258001.0L / 2615348736.0L, -1703481341.0L / 784604620800.0L,
     5614773343.0L / 80029671321600.0L, -10940565121.0L / 6307523724902400.0L},
    {20483.0L / 4032, -45767.0L / 24192, 10476617.0L / 31933440.0L, -45578707.0L / 1585059840.0L,
     1514526707.0L / 1046139494400.0L, -5016343559.0L / 106706228428800.0L,
     19742264573.0L / 17466988776652800.0L},
    {-3937.0L / 2016, 45767.0L / 60480, -1491199.0L / 15966720.0L, 321593093.0L / 43589145600.0L,
     -189532561.0L / 523069747200.0L, 460150601.0L / 38109367296000.0L,
     -28082396599.0L / 113535427048243200.0L},
    {17671.0L / 12096, -45767.0L / 362880, 96865.0L / 19160064.0L, -21971953.0L / 261534873600.0L,
     82561.0L / 448345497600.0L, -17608099.0L / 123122571264000.0L,
     -1184824691.0L / 75690284698828800.0L},
}}};

const SeriesTable kSeriesZeroPld2 = {{{
    {-12629.0L / 3024, 45767.0L / 12096, -9837221.0L / 7983360.0L, 153204313.0L / 653837184.0L,
     -2356782689.0L / 87178291200.0L, 20347993339.0L / 9700566220800.0L,
     -8744186458121.0L / 77410518441984000.0L},
    {20483.0L / 4032, -45767.0L / 16128, 2943449.0L / 3548160.0L, -107557349.0L / 792529920.0L,
     5074066909.0L / 348713164800.0L, -10190684747.0L / 9484998082560.0L,
     5994017812967.0L / 103214024589312000.0L},
    {-3937.0L / 2016, 45767.0L / 40320, -8607.0L / 39424.0L, 51408821.0L / 2724321600.0L,
     -35318011.0L / 34871316480.0L, 3348191339.0L / 118562476032000.0L,
     -56104711163.0L / 43667471941632000.0L},
    {17671.0L / 12096, -45767.0L / 241920, 22153.0L / 4561920.0L, -41092123.0L / 130767436800.0L,
     -7321421.0L / 348713164800.0L, -5642643317.0L / 2134124568576000.0L,
     -210863655707.0L / 681212562289459200.0L},
}}};

const SeriesTable kSeriesZeroPld3 = {{{
    {-12629.0L / 3024, 45767.0L / 9072, -27865393.0L / 11975040.0L, 557684327.0L / 817296480.0L,
     -235111157089.0L / 1569209241600.0L, 575696865983.0L / 26676557107200.0L,
     -73845973877087.0L / 32750603956224000.0L},
    {20483.0L / 4032, -45767.0L / 12096, 3549253.0L / 2280960.0L, -36881797.0L / 99066240.0L,
     95714204623.0L / 2092278988800.0L, -138581370311.0L / 35568742809600.0L,
     106905916402097.0L / 567677135241216000.0L},
    {-3937.0L / 2016, 45767.0L / 30240, -3156581.0L / 7983360.0L, 21796097.0L / 681080400.0L,
     -2365857293.0L / 1046139494400.0L, -102137141.0L / 17784371404800.0L,
     -3198002983423.0L / 283838567620608000.0L},
    {17671.0L / 12096, -45767.0L / 181440, 135959.0L / 47900160.0L, -14453093.0L / 16345929600.0L,
     -90901339.0L / 896690995200.0L, -1564247467.0L / 106706228428800.0L,
     -3513993676211.0L / 1703031405723648000.0L},
}}};

const SeriesTable& series_table(MethodVariant variant) {
    switch (variant) {
        case MethodVariant::PhaseFitted: return kSeriesPhaseFitted;
        case MethodVariant::ZeroPLD1: return kSeriesZeroPld1;
        case MethodVariant::ZeroPLD2: return kSeriesZeroPld2;
        case MethodVariant::ZeroPLD3: return kSeriesZeroPld3;
        default: throw std::logic_error("series_table: classical handled separately");
    }
}

void require_positive(double v) {
    if (!(v > 0.0)) throw NonPositiveV(v);
}

}  // namespace

std::string variant_name(MethodVariant variant) {
    switch (variant) {
        case MethodVariant::Classical: return "classical";
        case MethodVariant::PhaseFitted: return "phase-fitted";
        case MethodVariant::ZeroPLD1: return "zero-pld1";
        case MethodVariant::ZeroPLD2: return "zero-pld2";
        case MethodVariant::ZeroPLD3: return "zero-pld3";
    }
    return "?";
}

MethodVariant variant_from_name(const std::string& name) {
    for (MethodVariant m : kAllVariants)
        if (variant_name(m) == name) return m;
    throw std::invalid_argument("unknown method variant: " + name);
}

CoefficientSet classical_coefficients() {
    const ld den = static_cast<ld>(kClassicalDenominator);
    return make_set(MethodVariant::Classical, 0.0, EvaluationPath::ClosedForm,
                    kClassicalBNumerators[0] / den, kClassicalBNumerators[1] / den,
                    kClassicalBNumerators[2] / den, kClassicalBNumerators[3] / den);
}

CoefficientSet phase_fitted_coefficients(double v) {
    require_positive(v);
    const ld vl = v;
    const ld c = std::cos(vl);
    const ld v2 = vl * vl;
    const ld c2 = c * c, c3 = c2 * c, c4 = c3 * c;
    const ld num = -192 * c4 + 192 * c3 + (96 - 327 * v2) * c2 + (-120 + 404 * v2) * c -
                   137 * v2 + 24;
    const ld cm1 = c - 1;
    const ld den = v2 * cm1 * cm1 * cm1;
    const ld b3 = num / (96 * den);
    const ld b2 = -6 * b3 + 109.0L / 16;
    const ld b1 = 15 * b3 - 101.0L / 6;
    const ld b0 = -20 * b3 + 601.0L / 24;
    return make_set(MethodVariant::PhaseFitted, v, EvaluationPath::ClosedForm, b0, b1, b2, b3);
}

CoefficientSet zero_pld1_coefficients(double v) {
    require_positive(v);
    const ld vl = v;
    const ld c = std::cos(vl), s = std::sin(vl);
    const ld v3 = vl * vl * vl;
    const ld c2 = c * c, c3 = c2 * c, c4 = c3 * c, c5 = c4 * c, c6 = c5 * c;
    const ld den = (c4 - 2 * c3 + 2 * c - 1) * v3;

    const ld b0num = -288 * c6 * vl + 576 * s * c5 + 192 * c5 * vl - 192 * s * c4 +
                     190 * c4 * v3 + 720 * c4 * vl - 120 * c3 * vl - 672 * s * c3 +
                     370 * c3 * v3 + 168 * s * c2 - 540 * c2 * vl + 145 * c2 * v3 + 168 * c * s -
                     70 * c * v3 - 72 * c * vl + 108 * vl - 48 * s - 35 * v3;
    const ld b1num = -768 * c6 * vl + 1536 * s * c5 + 192 * c5 * vl + 500 * c4 * v3 -
                     192 * s * c4 + 2400 * c4 * vl + 1000 * c3 * v3 - 2112 * s * c3 -
                     1980 * c2 * vl + 595 * c2 * v3 + 288 * s * c2 - 100 * c * v3 + 648 * c * s -
                     192 * c * vl + 348 * vl - 195 * v3 - 168 * s;
    const ld b2num = -96 * c6 * vl + 192 * s * c5 - 192 * c5 * vl + 192 * s * c4 +
                     624 * c4 * vl + 216 * c3 * vl - 480 * s * c3 + 250 * c3 * v3 -
                     612 * c2 * vl + 215 * c2 * v3 - 72 * s * c2 - 70 * c * v3 + 216 * c * s -
                     24 * c * vl + 84 * vl - 48 * s - 35 * v3;
    const ld b3num = -192 * c5 * vl + 192 * s * c4 + 288 * c4 * vl + 192 * c3 * vl -
                     192 * s * c3 - 96 * s * c2 - 324 * c2 * vl + 125 * c2 * v3 + 120 * c * s +
                     60 * c * v3 - 24 * s + 36 * vl - 65 * v3;

    return make_set(MethodVariant::ZeroPLD1, v, EvaluationPath::ClosedForm, -b0num / (12 * den),
                    b1num / (48 * den), -b2num / (24 * den), b3num / (48 * den));
}

CoefficientSet zero_pld2_coefficients(double v) {
    require_positive(v);
    const ld vl = v;
    const ld c = std::cos(vl), s = std::sin(vl);
    if (std::abs(static_cast<double>(s)) < kSingularGuard)
        throw SingularDenominator("zero_pld2_coefficients: sin v ~ 0 at v = " + std::to_string(v));
    const ld v2 = vl * vl, v4 = v2 * v2;
    const ld c2 = c * c, c3 = c2 * c, c4 = c3 * c, c5 = c4 * c, c6 = c5 * c, c7 = c6 * c,
             c8 = c7 * c;
    const ld s4 = s * s * s * s;
    const ld den = v4 * s4 * (c - 1);

    const ld b0num = -6 + 25 * c3 * v4 + 16 * c7 * v2 - 120 * c4 - 32 * s * vl * c6 -
                     96 * s * vl * c7 + 32 * c8 * v2 - 36 * c * v2 + 15 * c * v4 + 20 * c4 * v4 -
                     96 * c8 + 30 * v4 * c2 + 20 * s * vl - 12 * v2 + 10 * c5 * v4 +
                     160 * s * vl * c5 + 140 * s * vl * c4 - 60 * s * vl * c3 -
                     134 * s * vl * c2 + 2 * s * vl * c + 18 * c + 30 * c2 - 54 * c3 + 192 * c6 +
                     36 * c5 + 24 * c2 * v2 - 64 * c6 * v2 + 88 * c3 * v2 - 68 * c5 * v2 +
                     20 * c4 * v2;
    const ld b1num = -18 - 192 * c7 + 120 * c3 * v4 + 128 * c7 * v2 - 480 * c4 -
                     320 * s * vl * c6 - 192 * s * vl * c7 + 64 * c8 * v2 - 104 * c * v2 +
                     30 * c * v4 + 15 * v4 + 60 * c4 * v4 - 192 * c8 + 75 * v4 * c2 + 64 * s * vl -
                     40 * v2 + 496 * s * vl * c5 + 680 * s * vl * c4 - 320 * s * vl * c3 -
                     418 * s * vl * c2 + 10 * s * vl * c + 42 * c + 162 * c2 - 258 * c3 +
                     528 * c6 + 408 * c5 + 32 * c2 * v2 - 176 * c6 * v2 + 336 * c3 * v2 -
                     360 * c5 * v2 + 120 * c4 * v2;
    const ld b2num = -6 - 96 * c7 + 15 * c3 * v4 + 48 * c7 * v2 - 84 * c4 - 128 * s * vl * c6 -
                     40 * c * v2 + 15 * c * v4 + 30 * v4 * c2 + 20 * s * vl - 8 * v2 +
                     48 * s * vl * c5 + 240 * s * vl * c4 - 48 * s * vl * c3 - 126 * s * vl * c2 -
                     6 * s * vl * c + 18 * c + 42 * c2 - 114 * c3 + 48 * c6 + 192 * c5 +
                     16 * c2 * v2 + 128 * c3 * v2 - 136 * c5 * v2 - 8 * c4 * v2;
    const ld b3num = 48 * c6 * v2 - 48 * c6 + 48 * c5 - 80 * s * vl * c5 - 48 * c5 * v2 +
                     80 * s * vl * c4 - 96 * c4 * v2 + 72 * c4 + 96 * c3 * v2 - 78 * c3 +
                     104 * s * vl * c3 - 18 * c2 - 102 * s * vl * c2 + 48 * c2 * v2 +
                     5 * v4 * c2 - 18 * s * vl * c - 48 * c * v2 + 30 * c + 10 * c * v4 - 6 +
                     16 * s * vl + 5 * v4;

    return make_set(MethodVariant::ZeroPLD2, v, EvaluationPath::ClosedForm, b0num / (2 * den),
                    -b1num / (8 * den), b2num / (4 * den), -b3num / (8 * den));
}

CoefficientSet zero_pld3_coefficients(double v) {
    require_positive(v);
    const ld vl = v;
    const ld c = std::cos(vl), s = std::sin(vl);
    if (std::abs(static_cast<double>(s)) < kSingularGuard)
        throw SingularDenominator("zero_pld3_coefficients: sin v ~ 0 at v = " + std::to_string(v));
    if (std::abs(static_cast<double>(c) + 1.0) < kSingularGuard)
        throw SingularDenominator("zero_pld3_coefficients: cos v ~ -1 at v = " +
                                  std::to_string(v));
    const ld v2 = vl * vl, v3 = v2 * vl, v5 = v3 * v2;
    const ld c2 = c * c, c3 = c2 * c, c4 = c3 * c, c5 = c4 * c, c6 = c5 * c, c7 = c6 * c,
             c8 = c7 * c;
    const ld den = v5 * (c + 1) * s * s * s;

    const ld b0num = 192 * c6 * v2 - 126 * s * c3 * v3 + 99 * s * c2 * vl - 126 * s * c2 * v3 -
                     18 * s * v3 * c + 630 * s * c3 * vl - 144 * s * c6 * vl + 48 * s * v3 * c7 -
                     288 * s * c7 * vl - 144 * c2 - 12 * c3 + 336 * c4 + 48 * s * v3 * c6 +
                     30 * v2 + 36 * c + 144 * c7 * v2 - 24 * c5 + 249 * c2 * v2 - 418 * c3 * v2 -
                     662 * c4 * v2 + 148 * c5 * v2 - 99 * c * s * vl - 9 * s * vl + 66 * c * v2 +
                     96 * s * v3 * c5 + 96 * s * c4 * v3 - 126 * s * c4 * vl - 18 * s * v3 -
                     192 * c8 + 176 * v2 * c8 - 288 * s * c5 * vl;
    const ld b1num = 12 + 352 * c6 * v2 - 36 * s * c3 * v3 + 168 * s * c2 * vl -
                     100 * s * c2 * v3 - 92 * s * v3 * c + 96 * s * c3 * vl - 672 * s * c6 * vl -
                     384 * c7 + 36 * c2 - 48 * c3 - 48 * c4 + 128 * s * v3 * c6 + 33 * v2 -
                     48 * c + 448 * c7 * v2 + 480 * c5 - 129 * c2 * v2 - 196 * c3 * v2 -
                     316 * c4 * v2 - 464 * c5 * v2 + 12 * c * s * vl - 45 * s * vl +
                     197 * c * v2 + 128 * s * v3 * c5 - 32 * s * c4 * v3 + 504 * s * c4 * vl +
                     4 * s * v3 - 288 * s * c5 * vl;
    const ld b2num = 152 * c6 * v2 - 96 * c6 + 48 * s * v3 * c5 - 192 * s * c5 * vl +
                     104 * c5 * v2 - 72 * s * c4 * vl + 48 * s * c4 * v3 - 244 * c4 * v2 +
                     144 * c4 + 216 * s * c3 * vl - 44 * s * c3 * v3 - 134 * c3 * v2 - 12 * c3 +
                     39 * s * c2 * vl - 44 * s * c2 * v3 - 48 * c2 + 79 * c2 * v2 -
                     33 * c * s * vl - 4 * s * v3 * c + 18 * c * v2 + 12 * c - 3 * s * vl -
                     4 * s * v3 + 10 * v2;
    const ld b3num = 208 * c5 * v2 - 96 * c5 - 216 * s * c4 * vl + 120 * c4 * v2 +
                     96 * s * c4 * v3 - 360 * c3 * v2 + 144 * c3 - 72 * s * c3 * vl +
                     72 * s * c3 * v3 + 252 * s * c2 * vl - 157 * c2 * v2 - 120 * s * c2 * v3 -
                     12 * c2 + 149 * c * v2 - 48 * c + 36 * c * s * vl - 72 * s * v3 * c -
                     45 * s * vl + 25 * v2 + 24 * s * v3 + 12;

    return make_set(MethodVariant::ZeroPLD3, v, EvaluationPath::ClosedForm, -b0num / (3 * den),
                    b1num / (4 * den), -b2num / (2 * den), b3num / (12 * den));
}

CoefficientSet series_coefficients(MethodVariant variant, double v) {
    if (variant == MethodVariant::Classical) {
        CoefficientSet set = classical_coefficients();
        set.v = v;
        set.path = EvaluationPath::Series;
        return set;
    }
    const SeriesTable& table = series_table(variant);
    const ld v2 = static_cast<ld>(v) * static_cast<ld>(v);
    std::array<ld, 4> b{};
    for (std::size_t i = 0; i < 4; ++i) {
        ld acc = table.c[i][6];
        for (int k = 5; k >= 0; --k) acc = acc * v2 + table.c[i][static_cast<std::size_t>(k)];
        b[i] = acc;
    }
    return make_set(variant, v, EvaluationPath::Series, b[0], b[1], b[2], b[3]);
}

CoefficientSet evaluate(MethodVariant variant, double v, double v_switch) {
    if (v < 0.0) throw NonPositiveV(v);
    if (variant == MethodVariant::Classical) return classical_coefficients();
    if (v < v_switch) return series_coefficients(variant, v);
    switch (variant) {
        case MethodVariant::PhaseFitted: return phase_fitted_coefficients(v);
        case MethodVariant::ZeroPLD1: return zero_pld1_coefficients(v);
        case MethodVariant::ZeroPLD2: return zero_pld2_coefficients(v);
        case MethodVariant::ZeroPLD3: return zero_pld3_coefficients(v);
        default: break;
    }
    throw std::logic_error("evaluate: unreachable");
}

}  // namespace msosc
