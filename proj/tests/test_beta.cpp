#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "drops/beta.hpp"
#include "drops/params.hpp"
#include "drops/quadrature.hpp"

using namespace drops;

TEST_CASE("constant profile") {
    const BetaProfile b = BetaProfile::constant(2.5);
    CHECK(b.is_constant());
    CHECK(b(0.0) == 2.5);
    CHECK(b(-7.3) == 2.5);
    CHECK(b.min() == 2.5);
    CHECK(b.max() == 2.5);
    CHECK(b.mean() == 2.5);
    CHECK(b.lipschitz() == 0.0);
    CHECK_FALSE(b.twice_differentiable());
    CHECK(b.integrate(-1.0, 3.0) == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(b.integrate(3.0, -1.0) == doctest::Approx(-10.0).epsilon(1e-14));

    CHECK_THROWS_AS(BetaProfile::constant(0.0), ConfigError);
    CHECK_THROWS_AS(BetaProfile::constant(-1.0), ConfigError);
    CHECK_THROWS_AS(BetaProfile::constant(std::nan("")), ConfigError);
}

TEST_CASE("sine profile values and metadata") {
    const BetaProfile b = BetaProfile::sine(1.0, 0.3, 2.0);
    CHECK(b(0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(b(0.5) == doctest::Approx(1.3).epsilon(1e-14));
    CHECK(b(1.5) == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(b.min() == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(b.max() == doctest::Approx(1.3).epsilon(1e-14));
    CHECK(b.mean() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(b.period() == 2.0);
    CHECK(b.lipschitz() == doctest::Approx(0.3 * 2.0 * std::acos(-1.0) / 2.0).epsilon(1e-14));
    CHECK(b.twice_differentiable());

    REQUIRE(b.maxima().size() == 1);
    REQUIRE(b.minima().size() == 1);
    CHECK(b.maxima()[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(b.minima()[0] == doctest::Approx(1.5).epsilon(1e-14));

    for (double x : {0.1, 0.77, 1.9})
        CHECK(b(x + 2.0) == doctest::Approx(b(x)).epsilon(1e-13));
}

TEST_CASE("sine profile exact integral") {
    const BetaProfile b = BetaProfile::sine(1.4, 0.5, 0.7);
    CHECK(b.integrate(0.0, 0.7) == doctest::Approx(1.4 * 0.7).epsilon(1e-13));
    CHECK(b.integrate(-2.1, 4.9) == doctest::Approx(1.4 * 7.0).epsilon(1e-13));

    // Partial spans against direct quadrature of the profile.
    for (auto [x0, x1] : {std::pair{0.13, 0.45}, {-0.8, 1.77}, {2.0, 2.03}}) {
        const double num = integrate([&](double x) { return b(x); }, x0, x1, 32, 16);
        CHECK(b.integrate(x0, x1) == doctest::Approx(num).epsilon(1e-12));
    }
}

TEST_CASE("sine profile validation") {
    CHECK_THROWS_AS(BetaProfile::sine(1.0, 1.0, 1.0), ConfigError);  // min hits 0
    CHECK_THROWS_AS(BetaProfile::sine(1.0, 1.5, 1.0), ConfigError);  // negative values
    CHECK_THROWS_AS(BetaProfile::sine(1.0, -0.1, 1.0), ConfigError); // bad amplitude
    CHECK_THROWS_AS(BetaProfile::sine(0.0, 0.0, 1.0), ConfigError);  // nonpositive mean
    CHECK_THROWS_AS(BetaProfile::sine(1.0, 0.5, 0.0), ConfigError);  // bad period
    CHECK_NOTHROW(BetaProfile::sine(1.0, 0.0, 1.0)); // degenerate but positive
}

TEST_CASE("piecewise-linear profile") {
    const BetaProfile b = BetaProfile::piecewise_linear({0.0, 0.5}, {1.0, 2.0}, 1.0);
    CHECK(b(0.0) == doctest::Approx(1.0));
    CHECK(b(0.25) == doctest::Approx(1.5));
    CHECK(b(0.5) == doctest::Approx(2.0));
    CHECK(b(0.75) == doctest::Approx(1.5)); // wrap-around segment back to 1
    CHECK(b.min() == doctest::Approx(1.0));
    CHECK(b.max() == doctest::Approx(2.0));
    CHECK(b.mean() == doctest::Approx(1.5));
    CHECK(b.lipschitz() == doctest::Approx(2.0));
    CHECK_FALSE(b.twice_differentiable());

    REQUIRE(b.maxima().size() == 1);
    CHECK(b.maxima()[0] == doctest::Approx(0.5));
    REQUIRE(b.minima().size() == 1);
    CHECK(b.minima()[0] == doctest::Approx(0.0));

    CHECK(b(1.25) == doctest::Approx(b(0.25)).epsilon(1e-13));
    CHECK(b(-0.25) == doctest::Approx(b(0.75)).epsilon(1e-13));

    CHECK(b.integrate(0.0, 1.0) == doctest::Approx(1.5).epsilon(1e-13));
    CHECK(b.integrate(0.25, 0.5) == doctest::Approx(0.25 * 1.75).epsilon(1e-13));
    // Two full periods plus [0.1, 0.3] of the rising segment.
    CHECK(b.integrate(0.1, 2.3) == doctest::Approx(3.0 + 0.28).epsilon(1e-12));
}

TEST_CASE("piecewise-linear validation") {
    using V = std::vector<double>;
    CHECK_THROWS_AS(BetaProfile::piecewise_linear(V{0.5, 0.2}, V{1, 1}, 1.0), ConfigError);
    CHECK_THROWS_AS(BetaProfile::piecewise_linear(V{0.0, 1.0}, V{1, 1}, 1.0), ConfigError);
    CHECK_THROWS_AS(BetaProfile::piecewise_linear(V{0.0, 0.5}, V{1, 0}, 1.0), ConfigError);
    CHECK_THROWS_AS(BetaProfile::piecewise_linear(V{0.0, 0.5}, V{1}, 1.0), ConfigError);
    CHECK_THROWS_AS(BetaProfile::piecewise_linear(V{}, V{}, 1.0), ConfigError);
}

TEST_CASE("rescaled profile speeds up the oscillation") {
    const BetaProfile b = BetaProfile::sine(1.0, 0.3, 2.0);
    const BetaProfile r = b.rescaled(0.25);
    CHECK(r.period() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(r.min() == b.min());
    CHECK(r.max() == b.max());
    for (double x : {0.0, 0.1, 0.33, 0.9})
        CHECK(r(x) == doctest::Approx(b(x / 0.25)).epsilon(1e-13));
    CHECK(r.lipschitz() == doctest::Approx(b.lipschitz() / 0.25).epsilon(1e-13));
    CHECK(r.integrate(0.0, 0.5) == doctest::Approx(0.25 * b.integrate(0.0, 2.0)).epsilon(1e-12));

    CHECK_THROWS_AS(b.rescaled(0.0), ConfigError);
    CHECK_THROWS_AS(b.rescaled(-2.0), ConfigError);

    // Rescaling a constant is a no-op.
    const BetaProfile c = BetaProfile::constant(1.5).rescaled(0.1);
    CHECK(c(0.42) == 1.5);
}

TEST_CASE("describe names the profile") {
    CHECK(BetaProfile::constant(1.0).describe().find("constant") != std::string::npos);
    CHECK(BetaProfile::sine(1.0, 0.1, 1.0).describe().find("sine") != std::string::npos);
}
