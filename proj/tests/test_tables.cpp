#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <future>
#include <vector>

#include "drops/equilibrium.hpp"
#include "drops/tables.hpp"

using namespace drops;

namespace {
const double kPi = std::acos(-1.0);

PhysicalParams case_a() { return PhysicalParams(1.0, 1.0, kPi / 6.0); }

SlopeTables exact_tables(const PhysicalParams& p) {
    SlopeTables::Options o;
    o.interp_tol = 0.0; // closed form on every query
    return SlopeTables(p, o);
}
} // namespace

TEST_CASE("critical length and its sign change") {
    const PhysicalParams p = case_a();
    const CriticalLength lc = critical_length(p);
    REQUIRE(lc.finite);
    CHECK(lc.value == doctest::Approx(3.7790491462516421).epsilon(1e-9));
    CHECK(lc.or_infinity() == lc.value);

    // The rear slope changes sign across the root.
    CHECK(endpoint_data(lc.value * (1.0 - 1e-5), p).slope_a > 0.0);
    CHECK(endpoint_data(lc.value * (1.0 + 1e-5), p).slope_a < 0.0);

    // No tilt, no detachment.
    const CriticalLength flat = critical_length(PhysicalParams(1.0, 1.0, 0.0));
    CHECK_FALSE(flat.finite);
    CHECK(std::isinf(flat.or_infinity()));
    CHECK_FALSE(critical_length(PhysicalParams(1.0, 0.0, 0.0)).finite);
}

TEST_CASE("slope identity holds exactly through interpolation") {
    const PhysicalParams p = case_a();
    const SlopeTables tab(p);
    const double lc = tab.ell_c().value;
    const double want = p.tilt * p.V0;
    for (int i = 1; i <= 200; ++i) {
        const double ell = lc * (0.02 + 1.46 * i / 200.0); // crosses the plateau
        const auto [G, H] = tab.GH(ell);
        CHECK(std::abs(H - G - want) <= 1e-10);
    }
}

TEST_CASE("table agrees with the closed form to its interpolation budget") {
    const PhysicalParams p = case_a();
    const SlopeTables tab(p);
    const SlopeTables ex = exact_tables(p);
    CHECK(ex.grid_size() == 0);
    CHECK(tab.grid_size() > 0);

    const double lc = tab.ell_c().value;
    for (int i = 1; i <= 97; ++i) {
        const double ell = lc * (0.03 + 0.95 * i / 97.0);
        const double scale = std::max(1.0, std::abs(ex.G(ell)));
        CHECK(std::abs(tab.G(ell) - ex.G(ell)) / scale <= 1e-6);
        CHECK(std::abs(tab.H(ell) - ex.H(ell)) / scale <= 1e-6);
        CHECK(std::abs(tab.lambda(ell) - ex.lambda(ell)) /
                  std::max(1.0, std::abs(ex.lambda(ell))) <=
              1e-5);
    }
}

TEST_CASE("exact mode matches endpoint_data directly") {
    const PhysicalParams p = case_a();
    const SlopeTables ex = exact_tables(p);
    for (double ell : {0.2, 0.9, 1.5, 3.0}) {
        const EndpointData e = endpoint_data(ell, p);
        CHECK(ex.G(ell) == doctest::Approx(0.5 * e.slope_a * e.slope_a).epsilon(1e-13));
        CHECK(ex.H(ell) == doctest::Approx(0.5 * e.slope_b * e.slope_b).epsilon(1e-13));
        CHECK(ex.F(ell) == doctest::Approx(ex.G(ell) + ex.H(ell)).epsilon(1e-13));
        CHECK(ex.lambda(ell) == doctest::Approx(e.lambda).epsilon(1e-13));
        CHECK(ex.slope_a(ell) == doctest::Approx(e.slope_a).epsilon(1e-13));
        CHECK(ex.slope_b(ell) == doctest::Approx(e.slope_b).epsilon(1e-13));
    }
}

TEST_CASE("both energies decrease up to the critical length, then freeze") {
    const PhysicalParams p = case_a();
    const SlopeTables tab(p);
    const double lc = tab.ell_c().value;

    double prevG = tab.G(0.02 * lc), prevH = tab.H(0.02 * lc);
    for (int i = 1; i <= 150; ++i) {
        const double ell = lc * (0.02 + 0.9698 * i / 150.0);
        const double G = tab.G(ell), H = tab.H(ell);
        CHECK(G <= prevG + 1e-12);
        CHECK(H <= prevH + 1e-12);
        prevG = G;
        prevH = H;
    }

    // Small supports blow up hard.
    CHECK(tab.H(lc / 100.0) >= 10.0 * tab.H(lc));

    // Past the critical length the rear energy vanishes and the front is
    // pinned at the drift value.
    for (double f : {1.0001, 1.5, 2.0, 10.0}) {
        CHECK(tab.G(lc * f) == 0.0);
        CHECK(tab.H(lc * f) == doctest::Approx(p.tilt * p.V0).epsilon(1e-9));
        CHECK(tab.slope_a(lc * f) == 0.0);
        CHECK(tab.slope_b(lc * f) == doctest::Approx(-1.0).epsilon(1e-8));
        CHECK(tab.lambda(lc * f) == doctest::Approx(1.4385440108983321).epsilon(1e-7));
    }
}

TEST_CASE("pair lookup equals the individual lookups") {
    const SlopeTables tab(case_a());
    for (double ell : {0.3, 1.1, 2.7, 4.2}) {
        const auto [G, H] = tab.GH(ell);
        CHECK(G == tab.G(ell));
        CHECK(H == tab.H(ell));
    }
}

TEST_CASE("queries below the grid floor fall back to the closed form") {
    const PhysicalParams p = case_a();
    const SlopeTables tab(p);
    const SlopeTables ex = exact_tables(p);
    const double tiny = tab.ell_c().value / 500.0;
    CHECK(tab.G(tiny) == doctest::Approx(ex.G(tiny)).epsilon(1e-13));
    CHECK(tab.H(tiny) == doctest::Approx(ex.H(tiny)).epsilon(1e-13));
}

TEST_CASE("untilted tables keep G equal to H") {
    const PhysicalParams p(1.0, 2.0, 0.0);
    const SlopeTables tab(p);
    CHECK_FALSE(tab.ell_c().finite);
    for (double ell : {0.4, 1.0, 5.0, 40.0})
        CHECK(tab.G(ell) == doctest::Approx(tab.H(ell)).epsilon(1e-12));
}

TEST_CASE("concurrent queries return identical values") {
    const PhysicalParams p = case_a();
    const SlopeTables tab(p);
    const double lc = tab.ell_c().value;

    auto sweep = [&] {
        std::vector<double> out;
        for (int i = 1; i <= 400; ++i)
            out.push_back(tab.F(lc * (0.03 + 1.2 * i / 400.0)));
        return out;
    };
    auto f1 = std::async(std::launch::async, sweep);
    auto f2 = std::async(std::launch::async, sweep);
    const std::vector<double> base = sweep(), r1 = f1.get(), r2 = f2.get();
    CHECK(r1 == base);
    CHECK(r2 == base);
}
