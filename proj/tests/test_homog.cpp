#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "drops/homog.hpp"

using namespace drops;

namespace {
const BetaProfile kSine = BetaProfile::sine(1.0, 0.3, 1.0);

// For beta = 1 + 0.3 sin(2 pi x) the harmonic mean evaluates in closed
// form: r(q) = sign(q - 1) * sqrt((q - 1)^2 - 0.09) off the plateau.
double sine_r(double q) {
    if (q >= 0.7 && q <= 1.3)
        return 0.0;
    const double v = std::sqrt((q - 1.0) * (q - 1.0) - 0.09);
    return q > 1.3 ? v : -v;
}
} // namespace

TEST_CASE("effective velocity matches the sine closed form") {
    for (double q : {1.31, 1.4, 2.0, 5.0, 0.69, 0.5, 0.05})
        CHECK(effective_velocity(q, kSine) == doctest::Approx(sine_r(q)).epsilon(1e-9));
    CHECK(effective_velocity(0.5, kSine) == doctest::Approx(-0.4).epsilon(1e-12));
}

TEST_CASE("pinning plateau is exactly zero") {
    for (int i = 0; i <= 20; ++i) {
        const double q = 0.7 + 0.6 * i / 20.0;
        CHECK(effective_velocity(q, kSine) == 0.0);
    }
}

TEST_CASE("arbitrarily close to the plateau edge the quadrature stays sane") {
    for (double eta : {1e-6, 1e-9, 1e-12}) {
        const double r = effective_velocity(1.3 + eta, kSine);
        CHECK(r >= 0.0);
        CHECK(r <= 2e-6 * std::sqrt(eta / 1e-12));
        // sqrt law: r ~ sqrt(0.6 * eta), honest to a few parts in 1e4 even
        // where the integrand loses most of its digits.
        CHECK(r == doctest::Approx(std::sqrt(0.6 * eta)).epsilon(1e-3));
    }
    const double rm = effective_velocity(0.7 - 1e-9, kSine);
    CHECK(rm <= 0.0);
    CHECK(rm == doctest::Approx(-std::sqrt(0.6e-9)).epsilon(1e-3));
}

TEST_CASE("effective velocity is monotone in the drive") {
    double prev = effective_velocity(1.301, kSine);
    for (int i = 1; i <= 120; ++i) {
        const double q = 1.301 + (5.0 - 1.301) * i / 120.0;
        const double r = effective_velocity(q, kSine);
        CHECK(r > prev);
        prev = r;
    }
}

TEST_CASE("constant adhesion reduces to the affine law") {
    const BetaProfile c = BetaProfile::constant(2.0);
    CHECK(effective_velocity(3.5, c) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(effective_velocity(0.5, c) == doctest::Approx(-1.5).epsilon(1e-14));
    CHECK(effective_velocity(2.0, c) == 0.0);
    CHECK_THROWS_AS(effective_velocity(std::nan(""), c), ConfigError);
}

TEST_CASE("memoized law tracks the direct evaluation") {
    const EffectiveLaw law = EffectiveLaw::from_beta(kSine);
    CHECK(law.plateau_min() == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(law.plateau_max() == doctest::Approx(1.3).epsilon(1e-14));

    double worst = 0.0;
    for (double q = 0.1; q <= 5.0; q += 0.013)
        worst = std::max(worst, std::abs(law(q) - effective_velocity(q, kSine)));
    CHECK(worst <= 2e-6);

    CHECK(law(1.0) == 0.0);
    CHECK(law(0.7) == 0.0);
    CHECK(law(1.3) == 0.0);

    // Repeat queries come from the shared cache and are bit-identical,
    // also through copies of the handle.
    const double v1 = law(2.37);
    const EffectiveLaw copy = law;
    CHECK(copy(2.37) == v1);
    CHECK(law(2.37) == v1);
}

TEST_CASE("wrapped explicit law is a passthrough") {
    const EffectiveLaw law = EffectiveLaw::from_function(sine_r, 0.7, 1.3);
    for (double q : {0.2, 0.7, 1.0, 1.3, 1.9, 4.0})
        CHECK(law(q) == sine_r(q));
    CHECK_THROWS_AS(EffectiveLaw::from_function(nullptr, 0.0, 1.0), ConfigError);
}

TEST_CASE("degeneracy diagnostics classify the plateau edge") {
    const DegeneracyFit smooth = sqrt_degeneracy_check(kSine);
    CHECK(smooth.exponent == doctest::Approx(0.5).epsilon(0.1));
    CHECK(smooth.smooth);

    // A corner maximum degrades the square root to a 1/log law: tiny
    // fitted exponent, log-law bound near half the profile slope.
    const BetaProfile tri = BetaProfile::piecewise_linear({0.0, 0.5}, {0.7, 1.3}, 1.0);
    const DegeneracyFit corner = sqrt_degeneracy_check(tri);
    CHECK(corner.exponent < 0.2);
    CHECK(corner.log_law_bound > 0.3);
    CHECK(corner.log_law_bound < 1.0);
    CHECK_FALSE(corner.smooth);

    CHECK_THROWS_AS(sqrt_degeneracy_check(BetaProfile::constant(1.0)), ConfigError);
}

TEST_CASE("oscillation-scale sweep runs and validates its inputs") {
    const PhysicalParams p(1.0, 4.0, std::asin(0.375)); // tilt*V0 = 1.5
    const SlopeTables tab(p);
    const BetaProfile beta = BetaProfile::sine(1.0, 0.25, 1.0);
    const DropState init{0.0, -1.0, 0.0};

    const std::vector<SweepPoint> pts =
        epsilon_sweep(init, 0.5, beta, {0.4, 0.2}, 5e-4, tab);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].eps == 0.4);
    CHECK(pts[1].eps == 0.2);
    for (const SweepPoint& s : pts) {
        CHECK(s.sup_err_a >= 0.0);
        CHECK(s.sup_err_b >= 0.0);
        CHECK(s.sup_err_a < 0.5);
        CHECK(s.sup_err_b < 0.5);
    }

    CHECK_THROWS_AS(epsilon_sweep(init, 0.5, beta, {}, 5e-4, tab), ConfigError);
    CHECK_THROWS_AS(epsilon_sweep(init, 0.5, beta, {0.4, 0.4}, 5e-4, tab), ConfigError);
    CHECK_THROWS_AS(epsilon_sweep(init, 0.5, beta, {0.2, 0.4}, 5e-4, tab), ConfigError);
    CHECK_THROWS_AS(epsilon_sweep(init, 0.5, beta, {0.4, -0.1}, 5e-4, tab), ConfigError);
    // A step that cannot resolve the fastest oscillation is refused.
    CHECK_THROWS_AS(epsilon_sweep(init, 0.5, beta, {0.4, 0.2}, 2e-3, tab), ConfigError);
}
