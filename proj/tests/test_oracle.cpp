#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "drops/equilibrium.hpp"
#include "drops/oracle.hpp"
#include "drops/tables.hpp"

using namespace drops;

namespace {
const double kPi = std::acos(-1.0);
PhysicalParams case_a() { return PhysicalParams(1.0, 1.0, kPi / 6.0); }
} // namespace

TEST_CASE("grid solve reproduces the flat-plane parabola") {
    const PhysicalParams p(1.0, 0.0, 0.0);
    const oracle::GridSolution g = oracle::fd_bvp(0.0, 2.0, p, 512);
    CHECK(std::abs(g.lambda - 1.5) <= 2e-5);
    CHECK(std::abs(g.slope_a - 1.5) <= 2e-5);
    CHECK(std::abs(g.slope_b + 1.5) <= 2e-5);
    // The bordered solve enforces the discrete volume exactly.
    CHECK(std::abs(g.volume() - 1.0) <= 1e-12);
    // support_begin points at the first strictly positive node; the boundary
    // node itself is pinned to zero, so an attached drop reports index 1.
    CHECK(g.support_begin == 1);
    CHECK(g.x.size() == 513);
    CHECK(g.u.size() == 513);
    CHECK(g.u[0] == 0.0);
    CHECK(g.u[512] == 0.0);
}

TEST_CASE("grid solve converges to the closed form at second order") {
    const PhysicalParams p = case_a();
    const EndpointData e = endpoint_data(1.5, p);

    const oracle::GridSolution fine = oracle::fd_bvp(0.0, 1.5, p, 2048);
    CHECK(std::abs(fine.lambda - e.lambda) <= 5e-6);
    CHECK(std::abs(fine.slope_a - e.slope_a) <= 2e-6);
    CHECK(std::abs(fine.slope_b - e.slope_b) <= 1e-6);
    CHECK(std::abs(fine.volume() - 1.0) <= 1e-12);

    // Halving the mesh divides the multiplier error by ~4.
    const double e256 = std::abs(oracle::fd_bvp(0.0, 1.5, p, 256).lambda - e.lambda);
    const double e512 = std::abs(oracle::fd_bvp(0.0, 1.5, p, 512).lambda - e.lambda);
    const double e1024 = std::abs(oracle::fd_bvp(0.0, 1.5, p, 1024).lambda - e.lambda);
    CHECK(e256 / e512 == doctest::Approx(4.0).epsilon(0.15));
    CHECK(e512 / e1024 == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("discrete slope identity converges at second order") {
    const PhysicalParams p = case_a();
    const double want = p.tilt * p.V0;
    auto resid = [&](int n) {
        const oracle::GridSolution g = oracle::fd_bvp(-1.0, 1.0, p, n);
        return 0.5 * g.slope_b * g.slope_b - 0.5 * g.slope_a * g.slope_a - want;
    };
    // H - G = tilt*V0 holds exactly in the continuum; the discrete residual
    // shrinks like n^-2.
    const double r512 = resid(512), r1024 = resid(1024);
    CHECK(std::abs(r1024) <= 1e-5);
    CHECK(std::abs(r512 / r1024) == doctest::Approx(4.0).epsilon(0.2));
}

TEST_CASE("constrained grid solve finds the detached support") {
    const PhysicalParams p = case_a();
    const double lc = critical_length(p).value;

    for (double span : {1.5 * lc, 2.0 * lc}) {
        const oracle::GridSolution g = oracle::fd_obstacle(-span, 0.0, p, 2048);
        const double cell = span / 2048;
        const double supp = 0.0 - g.x[g.support_begin];
        CHECK(std::abs(supp - lc) <= 2.0 * cell);
        CHECK(std::abs(g.slope_b + 1.0) <= 1e-4);
        CHECK(std::abs(g.volume() - 1.0) <= 1e-8);
        // Nothing dips below the plane.
        for (Eigen::Index i = 0; i < g.u.size(); ++i)
            CHECK(g.u[i] >= -1e-12);
        // The dry region really is dry.
        for (Eigen::Index i = 0; i + 1 < g.support_begin; ++i)
            CHECK(g.u[i] == 0.0);
    }

    // Below the critical length the constraint is inactive and the two
    // solvers coincide.
    const oracle::GridSolution free_g = oracle::fd_bvp(0.0, 1.5, p, 512);
    const oracle::GridSolution con_g = oracle::fd_obstacle(0.0, 1.5, p, 512);
    CHECK(con_g.support_begin == 1);
    CHECK(std::abs(con_g.lambda - free_g.lambda) <= 1e-7);
    CHECK((con_g.u - free_g.u).cwiseAbs().maxCoeff() <= 1e-7);
}
