#include "drops/waves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "drops/equilibrium.hpp"
#include "drops/homog.hpp"

namespace drops {

TravelingWave traveling_wave(double beta0, const SlopeTables& tables) {
    const PhysicalParams& p = tables.params();
    if (!(p.tilt > 0.0))
        throw ConfigError("traveling waves need tilt > 0 (kappa > 0 and alpha > 0)");
    if (!(std::isfinite(beta0) && beta0 > 0.0))
        throw ConfigError("traveling wave: beta must be finite and > 0");

    const double s = p.V0 * p.tilt;
    const double ell_c = tables.ell_c().value;

    TravelingWave tw;
    if (s < 2.0 * beta0) {
        // Both contact lines move: the length balances the slope sum
        // against the total adhesion, F(ell0) = 2 * beta0. F decreases
        // from +inf to s on (0, ell_c], so the root is unique.
        double hi = ell_c;
        double lo = 0.5 * hi;
        int guard = 0;
        while (tables.F(lo) < 2.0 * beta0) {
            lo *= 0.5;
            if (++guard > 600)
                throw NumericalError("traveling wave: failed to bracket the length");
        }
        while (hi - lo > 1e-12 * hi) {
            const double mid = 0.5 * (lo + hi);
            (tables.F(mid) > 2.0 * beta0 ? lo : hi) = mid;
        }
        tw.ell0 = 0.5 * (lo + hi);
        tw.speed = 0.5 * s;
        tw.degenerate_rear = false;
    } else {
        // Strong driving: the rear slope degenerates to zero and the
        // support sits at the critical length.
        tw.ell0 = ell_c;
        tw.speed = s - beta0;
        tw.degenerate_rear = true;
    }
    return tw;
}

double tw_speed_constant(double s, double beta0) {
    return s <= 2.0 * beta0 ? 0.5 * s : s - beta0;
}

PulsatingWave pulsating_wave(const BetaProfile& beta, const SlopeTables& tables,
                             double tol, int grid_n, int max_periods) {
    const PhysicalParams& p = tables.params();
    if (!(p.tilt > 0.0))
        throw ConfigError("pulsating waves need tilt > 0 (kappa > 0 and alpha > 0)");
    if (!(beta.max() - beta.min() < p.V0 * p.tilt))
        throw ConfigError("pulsating wave requires max beta - min beta < V0 * tilt");
    if (grid_n < 16 || max_periods < 2)
        throw ConfigError("pulsating wave: grid_n must be >= 16 and max_periods >= 2");
    if (!(std::isfinite(tol) && tol > 0.0))
        throw ConfigError("pulsating wave: tol must be finite and > 0");
    if (grid_n % 2 != 0)
        ++grid_n; // composite Simpson below needs an even cell count

    const double period = beta.period();
    const double ell_c = tables.ell_c().value;

    // dz/dx in the front-position variable; the clamp keeps the length
    // from exceeding the critical value (the constrained regime only
    // ever shortens there).
    auto rhs = [&](double x, double y) {
        const double yc = std::min(y, ell_c);
        const double den = tables.H(yc) - beta(x);
        if (!(den > 1e-12))
            throw NumericalError("pulsating wave: front stalled (H(z) - beta <= 0)");
        double f = (tables.F(yc) - beta(x - yc) - beta(x)) / den;
        if (y >= ell_c)
            f = std::min(f, 0.0);
        return f;
    };

    // One embedded 4(5) step (Cash-Karp), returns the new y and an
    // error estimate.
    auto ck_step = [&](double x, double y, double h, double& err) {
        const double k1 = rhs(x, y);
        const double k2 = rhs(x + h / 5, y + h * (k1 / 5));
        const double k3 = rhs(x + 3 * h / 10, y + h * (3 * k1 / 40 + 9 * k2 / 40));
        const double k4 = rhs(x + 3 * h / 5, y + h * (3 * k1 / 10 - 9 * k2 / 10 + 6 * k3 / 5));
        const double k5 = rhs(x + h, y + h * (-11 * k1 / 54 + 5 * k2 / 2 - 70 * k3 / 27 + 35 * k4 / 27));
        const double k6 = rhs(x + 7 * h / 8,
                              y + h * (1631 * k1 / 55296 + 175 * k2 / 512 + 575 * k3 / 13824 +
                                       44275 * k4 / 110592 + 253 * k5 / 4096));
        const double y5 = y + h * (37 * k1 / 378 + 250 * k3 / 621 + 125 * k5 / 594 + 512 * k6 / 1771);
        const double y4 = y + h * (2825 * k1 / 27648 + 18575 * k3 / 48384 + 13525 * k5 / 55296 +
                                   277 * k6 / 14336 + k4 / 4);
        err = std::abs(y5 - y4);
        return y5;
    };

    const double step_tol = 1e-12 * std::max(1.0, ell_c);
    auto integrate_cell = [&](double x0, double x1, double y) {
        double x = x0;
        double h = x1 - x0;
        int evals = 0;
        while (x < x1) {
            h = std::min(h, x1 - x);
            double err = 0.0;
            const double trial = ck_step(x, y, h, err);
            if (err <= step_tol || h <= 1e-14 * period) {
                x += h;
                y = std::min(trial, ell_c);
                h *= err > 0.0 ? std::min(5.0, 0.9 * std::pow(step_tol / err, 0.2)) : 5.0;
            } else {
                h *= std::max(0.1, 0.9 * std::pow(step_tol / err, 0.25));
            }
            if (++evals > 100000)
                throw NumericalError("pulsating wave: step control failed to advance");
        }
        return y;
    };

    // Start from the traveling wave for the mean adhesion; when that
    // length is infeasible for the heterogeneous profile (front stall),
    // halve it and retry.
    double y0 = traveling_wave(beta.mean(), tables).ell0;
    const double dx = period / grid_n;

    for (int attempt = 0;; ++attempt) {
        try {
            std::vector<double> prev, cur(std::size_t(grid_n) + 1);
            std::vector<double> sup_diffs;
            double y_start = y0;
            bool converged = false;
            for (int cycle = 0; cycle < max_periods; ++cycle) {
                cur[0] = y_start;
                for (int i = 0; i < grid_n; ++i)
                    cur[std::size_t(i) + 1] = integrate_cell(i * dx, (i + 1) * dx, cur[std::size_t(i)]);
                if (!prev.empty()) {
                    double sup = 0.0;
                    for (std::size_t i = 0; i < cur.size(); ++i)
                        sup = std::max(sup, std::abs(cur[i] - prev[i]));
                    sup_diffs.push_back(sup);
                    if (sup < tol) {
                        converged = true;
                        break;
                    }
                }
                prev = cur;
                y_start = cur.back();
            }
            if (!converged)
                throw NumericalError("pulsating wave: period iteration did not converge");

            PulsatingWave wave;
            wave.period = period;
            wave.sup_diffs = std::move(sup_diffs);
            wave.x.resize(cur.size());
            for (std::size_t i = 0; i < cur.size(); ++i)
                wave.x[i] = double(i) * dx;
            wave.z = std::move(cur);

            // Time to traverse one period: T = integral dx / (H(z) - beta).
            auto speed_at = [&](std::size_t i) {
                return tables.H(std::min(wave.z[i], ell_c)) - beta(wave.x[i]);
            };
            double T = 0.0;
            for (int i = 0; i < grid_n; i += 2) {
                const std::size_t k = std::size_t(i);
                T += dx / 3.0 *
                     (1.0 / speed_at(k) + 4.0 / speed_at(k + 1) + 1.0 / speed_at(k + 2));
            }
            wave.time_period = T;
            wave.mean_speed = period / T;
            return wave;
        } catch (const NumericalError&) {
            if (attempt >= 6)
                throw;
            y0 *= 0.5;
        }
    }
}

double homogenized_tw_speed(const EffectiveLaw& r, double s) {
    if (!(std::isfinite(s) && s > 0.0))
        throw ConfigError("homogenized wave: driving strength must be finite and > 0");
    // Mass balance: the rear recedes at -r(q0), the front advances at
    // r(q0 + s). If even q0 = 0 makes the sum nonnegative the wave
    // slides with a pinned or advancing rear at speed r(s); otherwise
    // bisect for the balancing q0 (phi is nondecreasing in q0).
    if (r(s) + r(0.0) >= 0.0)
        return r(s);
    double lo = 0.0;
    double hi = std::max(1.0, s);
    int guard = 0;
    while (r(hi + s) + r(hi) <= 0.0) {
        hi *= 2.0;
        if (++guard > 600)
            throw NumericalError("homogenized wave: failed to bracket the balance point");
    }
    while (hi - lo > 1e-12 * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        (r(mid + s) + r(mid) < 0.0 ? lo : hi) = mid;
    }
    return r(0.5 * (lo + hi) + s);
}

double homogenized_tw_speed(const EffectiveLaw& r, const PhysicalParams& p) {
    if (!(p.tilt > 0.0))
        throw ConfigError("traveling waves need tilt > 0 (kappa > 0 and alpha > 0)");
    return homogenized_tw_speed(r, p.V0 * p.tilt);
}

std::optional<StickingBarrier> sticking_barrier(const BetaProfile& beta,
                                                const SlopeTables& tables) {
    const PhysicalParams& p = tables.params();
    const double target = beta.max();

    // Need a length with H(ell0) = max beta. H decreases onto
    // [tilt * V0, +inf) over (0, ell_c], so for tilted drops the level
    // is reachable only when tilt * V0 < max beta.
    const CriticalLength lc = tables.ell_c();
    if (lc.finite && !(p.tilt * p.V0 < target))
        return std::nullopt;

    double hi = lc.finite ? lc.value : std::cbrt(p.V0);
    int guard = 0;
    if (!lc.finite) {
        while (tables.H(hi) > target) {
            hi *= 2.0;
            if (++guard > 600)
                throw NumericalError("sticking barrier: failed to bracket the length");
        }
    }
    double lo = 0.5 * hi;
    guard = 0;
    while (tables.H(lo) < target) {
        lo *= 0.5;
        if (++guard > 600)
            throw NumericalError("sticking barrier: failed to bracket the length");
    }
    while (hi - lo > 1e-13 * hi) {
        const double mid = 0.5 * (lo + hi);
        (tables.H(mid) > target ? lo : hi) = mid;
    }
    const double ell0 = 0.5 * (lo + hi);

    // Rear on the first adhesion minimum; front on the nearest maximum
    // at least ell0 ahead of it.
    const double a_star = beta.minima().front();
    const double P = beta.period();
    double b_star = std::numeric_limits<double>::infinity();
    for (double m : beta.maxima()) {
        const double shifted = m + P * std::ceil((a_star + ell0 - m) / P);
        b_star = std::min(b_star, shifted);
    }

    const EquilibriumProfile u =
        solve_obstacle(a_star, b_star, p, lc.or_infinity());
    StickingBarrier bar;
    bar.a_star = a_star;
    bar.b_star = b_star;
    bar.ell0 = ell0;
    bar.margin_front = beta(b_star) - 0.5 * u.slope_b() * u.slope_b();
    bar.margin_rear = 0.5 * u.slope_a() * u.slope_a() - beta(a_star);
    if (bar.margin_front >= -1e-9 && bar.margin_rear >= -1e-9)
        return bar;
    return std::nullopt;
}

} // namespace drops
