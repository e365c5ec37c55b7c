#include "drops/dynamics.hpp"

#include <cmath>
#include <iostream>
#include <limits>

#include "drops/equilibrium.hpp"
#include "drops/homog.hpp"

namespace drops {

namespace {

void check_step_inputs(const DropState& s, double h) {
    if (!(std::isfinite(h) && h > 0.0)) throw ConfigError("step size must be finite and > 0");
    if (!(std::isfinite(s.a) && std::isfinite(s.b) && s.b > s.a))
        throw ConfigError("state must have finite a < b");
}

DropState advance(const DropState& s, double rear_speed, double front_speed, double h,
                  double ell_c, double ell_floor) {
    const double a_half = s.a + rear_speed * h;
    const double b_next = s.b + front_speed * h;
    // Snap the rear forward when the new interval would exceed the
    // critical length (with ell_c = +inf this branch never fires).
    const double a_next = std::max(a_half, b_next - ell_c);
    if (!(b_next - a_next >= ell_floor))
        throw NumericalError("drop collapse: step size too large or invalid data");
    return {s.t + h, a_next, b_next};
}

} // namespace

DropState step(const DropState& s, double h, const BetaProfile& beta, const SlopeTables& tables,
               double ell_floor) {
    check_step_inputs(s, h);
    const auto [G, H] = tables.GH(s.ell());
    return advance(s, beta(s.a) - G, H - beta(s.b), h, tables.ell_c().or_infinity(), ell_floor);
}

DropState step_homogenized(const DropState& s, double h, const EffectiveLaw& r,
                           const SlopeTables& tables, double ell_floor) {
    check_step_inputs(s, h);
    const auto [G, H] = tables.GH(s.ell());
    return advance(s, -r(G), r(H), h, tables.ell_c().or_infinity(), ell_floor);
}

Trajectory simulate(DropState initial, double T, double h, const BetaProfile& beta,
                    const SlopeTables& tables, VelocityLaw law, const SimOptions& opt) {
    if (!(std::isfinite(T) && T > 0.0)) throw ConfigError("run.T must be finite and > 0");
    if (!(std::isfinite(h) && h > 0.0)) throw ConfigError("run.h must be finite and > 0");
    if (opt.stride < 1) throw ConfigError("run.stride must be >= 1");
    if (law == VelocityLaw::Homogenized && opt.effective == nullptr)
        throw ConfigError("homogenized law requires an effective velocity");
    if (!(std::isfinite(initial.a) && std::isfinite(initial.b) && initial.b > initial.a))
        throw ConfigError("initial state must have finite a < b");

    const PhysicalParams& p = tables.params();
    const double ell_c = tables.ell_c().or_infinity();
    if (initial.b - initial.a > ell_c) {
        std::cerr << "warning: initial length " << (initial.b - initial.a)
                  << " exceeds the critical length " << ell_c
                  << "; projecting the rear contact forward\n";
        initial.a = initial.b - ell_c;
    }
    const double floor_base = tables.ell_c().finite ? tables.ell_c().value : initial.ell();
    const double ell_floor = opt.ell_floor_rel * floor_base;

    // Concrete endpoint speed bound: slopes stay below
    // M = max(2 sup sqrt(beta), |front slope at t=0|) along the discrete
    // evolution, so each endpoint moves at most M^2/2 + max beta per unit
    // time. Violations indicate a broken table or an unstable step.
    const double M = std::max(2.0 * std::sqrt(beta.max()),
                              std::abs(tables.slope_b(initial.ell())));
    const double speed_cap = 0.5 * M * M + beta.max();
    const double drift_floor = p.tilt * p.V0;

    Trajectory out{p, beta.describe(), h, opt.stride,
                   law == VelocityLaw::Homogenized, {}};

    const long N = std::max(1L, std::lround(T / h));
    out.samples.reserve(std::size_t(N / opt.stride) + 2);

    auto record = [&](const DropState& s) {
        TrajectorySample smp;
        smp.t = s.t;
        smp.a = s.a;
        smp.b = s.b;
        smp.ell = s.ell();
        if (opt.diagnostics) {
            const EquilibriumProfile prof = solve_obstacle(s.a, s.b, p, ell_c);
            smp.lambda = prof.lambda();
            smp.slope_a = prof.slope_a();
            smp.slope_b = prof.slope_b();
            smp.energy = total_energy(prof, beta);
        } else {
            smp.lambda = tables.lambda(s.ell());
            smp.slope_a = tables.slope_a(s.ell());
            smp.slope_b = tables.slope_b(s.ell());
            smp.energy = std::numeric_limits<double>::quiet_NaN();
        }
        out.samples.push_back(smp);
    };

    auto advance_checked = [&](const DropState& s, double hs) {
        const DropState n = (law == VelocityLaw::Raw)
                                ? step(s, hs, beta, tables, ell_floor)
                                : step_homogenized(s, hs, *opt.effective, tables, ell_floor);
        if (opt.assert_bounds) {
            // Rounding of a +/- v*h costs ~eps*|a|, which is eps*|a|/h on
            // the recovered speed; allow for that explicitly.
            const double fp = 4.0 * std::numeric_limits<double>::epsilon() *
                              (std::abs(s.a) + std::abs(s.b) + 1.0) / hs;
            const double va = (n.a - s.a) / hs;
            const double vb = (n.b - s.b) / hs;
            if (std::abs(va) > speed_cap * (1.0 + 1e-6) + fp ||
                std::abs(vb) > speed_cap * (1.0 + 1e-6) + fp)
                throw NumericalError("endpoint speed bound violated: unstable step or bad data");
            if (law == VelocityLaw::Raw) {
                const double drift = drift_floor + beta(s.a) - beta(s.b);
                if (va + vb < drift - 1e-9 * std::max(1.0, std::abs(drift)) - fp)
                    throw NumericalError("endpoint drift bound violated: unstable step");
            }
        }
        return n;
    };

    const double t0 = initial.t;
    DropState s = initial;
    record(s);
    for (long n = 1; n <= N; ++n) {
        if (opt.half_step) {
            s = advance_checked(advance_checked(s, 0.5 * h), 0.5 * h);
        } else {
            s = advance_checked(s, h);
        }
        s.t = t0 + double(n) * h; // exact grid, no accumulation drift
        if (n % opt.stride == 0 || n == N) record(s);
    }
    return out;
}

ComparisonReport check_comparison(const Trajectory& t1, const Trajectory& t2, double K,
                                  double C) {
    if (t1.samples.size() != t2.samples.size() || t1.h != t2.h)
        throw ConfigError("comparison requires trajectories on the same grid");
    ComparisonReport rep;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    const double t0 = t1.samples.empty() ? 0.0 : t1.samples.front().t;
    for (std::size_t i = 0; i < t1.samples.size(); ++i) {
        const TrajectorySample& s1 = t1.samples[i];
        const TrajectorySample& s2 = t2.samples[i];
        if (s1.t != s2.t) throw ConfigError("comparison requires trajectories on the same grid");
        const double tol = C * t1.h * std::exp(K * (s1.t - t0));
        const double margin = std::min(s2.a + tol - s1.a, s2.b + tol - s1.b);
        if (margin < rep.worst_margin) {
            rep.worst_margin = margin;
            rep.worst_time = s1.t;
        }
    }
    rep.ordered = rep.worst_margin >= 0.0;
    return rep;
}

std::optional<double> sliding_onset(const Trajectory& traj, double eta,
                                    const BetaProfile& beta) {
    const PhysicalParams& p = traj.params;
    if (!(beta.max() - beta.min() < p.V0 * p.tilt))
        throw ConfigError("sliding onset is undefined unless max beta - min beta < V0 * tilt");
    const auto& s = traj.samples;
    if (s.size() < 2) return std::nullopt;
    // Scan backward for the first index whose whole suffix of forward
    // differences clears eta.
    std::ptrdiff_t first_bad = -1;
    for (std::ptrdiff_t i = std::ptrdiff_t(s.size()) - 2; i >= 0; --i) {
        const double v = (s[std::size_t(i) + 1].b - s[std::size_t(i)].b) /
                         (s[std::size_t(i) + 1].t - s[std::size_t(i)].t);
        if (!(v > eta)) {
            first_bad = i;
            break;
        }
    }
    if (first_bad == std::ptrdiff_t(s.size()) - 2) return std::nullopt;
    return s[std::size_t(first_bad + 1)].t;
}

} // namespace drops
