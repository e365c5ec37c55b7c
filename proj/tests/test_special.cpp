#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "drops/special.hpp"

using namespace drops::detail;

namespace {
void check_rel(double got, double want, double eps = 1e-12) {
    CHECK(got == doctest::Approx(want).epsilon(eps));
}
} // namespace

TEST_CASE("ratio kernels hit their limits at zero") {
    CHECK(sinhc(0.0) == 1.0);
    CHECK(tanhc(0.0) == 1.0);
    check_rel(sinhc(1e-8), 1.0);
    check_rel(tanhc(1e-8), 1.0);
    check_rel(one_minus_tanhc(0.0), 1.0 / 3);
    check_rel(one_minus_invsinhc(0.0), 1.0 / 6);
    check_rel(xcoth_minus_one(0.0), 1.0 / 3);
    // Inside the series branch the subtracted forms would lose every digit;
    // the series must sit on the limit to ~1e-13.
    check_rel(one_minus_tanhc(1e-8), 1.0 / 3);
    check_rel(one_minus_invsinhc(1e-8), 1.0 / 6);
    check_rel(xcoth_minus_one(1e-8), 1.0 / 3);
}

TEST_CASE("kernels match frozen references on both sides of each seam") {
    // Values computed independently at high precision. one_minus_tanhc
    // switches branches at |x| = 0.25, the other two ratios at 0.5.
    check_rel(sinhc(0.01), 1.0000166667500002);
    check_rel(tanhc(0.01), 0.99996666799994603);
    check_rel(one_minus_tanhc(0.01), 0.33332000053966067);
    check_rel(one_minus_invsinhc(0.01), 0.16666472224272466);
    check_rel(xcoth_minus_one(0.01), 0.33333111113227492);

    check_rel(one_minus_tanhc(0.2499), 0.32521194677913967);
    check_rel(one_minus_tanhc(0.2501), 0.32519926325972294);
    // The last series term kept leaves ~1e-11 truncation right at the seam.
    check_rel(one_minus_invsinhc(0.4999), 0.16193234290375868, 2e-11);
    check_rel(one_minus_invsinhc(0.5001), 0.1619286514253276);
    check_rel(xcoth_minus_one(0.4999), 0.3279089475257932, 2e-11);
    check_rel(xcoth_minus_one(0.5001), 0.32790470704407728);

    check_rel(sinhc(2.0), 1.8134302039235094);
    check_rel(tanhc(2.0), 0.48201379003790844);
    check_rel(one_minus_tanhc(2.0), 0.12949655249052289);
    check_rel(one_minus_invsinhc(2.0), 0.1121397176141084);
    check_rel(xcoth_minus_one(2.0), 0.26865736036377405);
}

TEST_CASE("kernels are even") {
    for (double x : {1e-3, 0.2, 0.49, 3.0}) {
        CHECK(sinhc(-x) == sinhc(x));
        CHECK(tanhc(-x) == tanhc(x));
        CHECK(one_minus_tanhc(-x) == one_minus_tanhc(x));
        CHECK(one_minus_invsinhc(-x) == one_minus_invsinhc(x));
        CHECK(xcoth_minus_one(-x) == xcoth_minus_one(x));
    }
}

TEST_CASE("large arguments saturate instead of overflowing") {
    check_rel(sinhc(30.0), 178107909692.07437);
    check_rel(tanhc(30.0), 1.0 / 30.0);
    check_rel(one_minus_tanhc(30.0), 0.0010740740740740741);
    check_rel(one_minus_invsinhc(30.0), 0.0011111111111048727);
    check_rel(xcoth_minus_one(30.0), 0.032222222222222222);

    // sinh overflows past ~710; the guarded ratios must stay finite.
    CHECK(std::isfinite(one_minus_invsinhc(800.0)));
    check_rel(one_minus_invsinhc(800.0), 1.0 / 640000.0);
    check_rel(xcoth_minus_one(800.0), 799.0 / 640000.0);
    check_rel(tanhc(800.0), 1.0 / 800.0);
}

TEST_CASE("hyperbolic difference kernels") {
    // Frozen references straddle the series/direct seam at m*p = 0.5.
    check_rel(cosh_diff(0.3, 1.2, 0.7), 0.48190797058022758);
    check_rel(sinhc_diff(0.3, 1.2, 0.7), 0.15971307668979407);
    check_rel(cosh_diff(0.41666, 1.2, 0.7), 0.48838336040223465);
    check_rel(cosh_diff(0.41667, 1.2, 0.7), 0.48838400863826446);
    check_rel(sinhc_diff(0.41666, 1.2, 0.7), 0.16100309532516007);
    check_rel(sinhc_diff(0.41667, 1.2, 0.7), 0.16100322430659772);
    check_rel(cosh_diff(2.5, 0.9, 0.1), 0.6024247088928995);
    check_rel(sinhc_diff(2.5, 0.9, 0.1), 0.17192230788443135);

    // m -> 0 limits: (p^2 - q^2)/2 and (p^2 - q^2)/6.
    check_rel(cosh_diff(1e-6, 1.2, 0.7), 0.475, 1e-10);
    check_rel(sinhc_diff(1e-6, 1.2, 0.7), 0.475 / 3.0, 1e-10);

    // Even in p and q separately (cosh is even, sinhc is even).
    CHECK(cosh_diff(0.3, -1.2, 0.7) == cosh_diff(0.3, 1.2, 0.7));
    CHECK(sinhc_diff(0.3, 1.2, -0.7) == sinhc_diff(0.3, 1.2, 0.7));
}
