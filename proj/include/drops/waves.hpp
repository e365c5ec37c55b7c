#pragma once

#include <optional>
#include <vector>

#include "drops/beta.hpp"
#include "drops/params.hpp"
#include "drops/tables.hpp"

namespace drops {

class EffectiveLaw; // homog.hpp

/// Rigidly translating solution for constant adhesion beta0.
struct TravelingWave {
    double ell0;  ///< support length
    double speed; ///< common speed of both contact points
    bool degenerate_rear; ///< rear slope zero (support pinned at the critical length)
};

/// Wave length from the balance F(ell0) = 2*beta0 (or the critical
/// length when the balance cannot be met), speed from the two-branch
/// linear formula. Requires tilt > 0.
TravelingWave traveling_wave(double beta0, const SlopeTables& tables);

/// The closed-form speed curve as a function of the driving strength
/// s = V0 * tilt: s/2 up to the kink at 2*beta0, then s - beta0.
double tw_speed_constant(double s, double beta0);

/// Periodic pulsating profile over heterogeneous beta: z(x) is the
/// converged support length when the front contact sits at x.
struct PulsatingWave {
    std::vector<double> x; ///< one period of front positions, endpoints inclusive
    std::vector<double> z; ///< support length at each x
    double period;
    double time_period; ///< T with b(t + T) = b(t) + period
    double mean_speed;  ///< period / T
    std::vector<double> sup_diffs; ///< per-period iteration sup-differences
};

/// Integrate the length equation dz/dx in the front-position variable,
/// clamped at the critical length, over successive periods until the
/// profile repeats to `tol`. Requires max beta - min beta < V0 * tilt.
PulsatingWave pulsating_wave(const BetaProfile& beta, const SlopeTables& tables,
                             double tol = 1e-8, int grid_n = 2048, int max_periods = 400);

/// Speed of the wave under the effective velocity law with driving
/// strength s = V0 * tilt: r(s) when r(s) + r(0) >= 0, otherwise
/// r(q0 + s) at the root of r(q0 + s) + r(q0) = 0 (the root may sit on a
/// plateau; the speed is unique regardless).
double homogenized_tw_speed(const EffectiveLaw& r, double s);
double homogenized_tw_speed(const EffectiveLaw& r, const PhysicalParams& p);

/// A stationary configuration that no trajectory can cross: rear on a
/// beta minimum, front on a maximum one adjusted wavelength ahead.
struct StickingBarrier {
    double a_star, b_star;
    double ell0;         ///< length with H(ell0) = max beta
    double margin_front; ///< beta(b*) - H(b* - a*), must be >= -1e-9
    double margin_rear;  ///< G(b* - a*) - beta(a*), must be >= -1e-9
};

/// Attempt the barrier construction; absence is a valid result (the
/// criterion is sufficient, not necessary).
std::optional<StickingBarrier> sticking_barrier(const BetaProfile& beta,
                                                const SlopeTables& tables);

} // namespace drops
