#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drops/beta.hpp"
#include "drops/params.hpp"
#include "drops/tables.hpp"

namespace drops {

class EffectiveLaw; // homog.hpp

/// Instantaneous contact-line configuration.
struct DropState {
    double t = 0.0;
    double a = 0.0;
    double b = 1.0;
    double ell() const { return b - a; }
};

struct TrajectorySample {
    double t, a, b, ell;
    double lambda, slope_a, slope_b;
    double energy; ///< NaN when the run was made with diagnostics off
};

struct Trajectory {
    PhysicalParams params;
    std::string beta_desc;
    double h = 0.0;
    int stride = 1;
    bool homogenized = false;
    std::vector<TrajectorySample> samples;
};

enum class VelocityLaw { Raw, Homogenized };

struct SimOptions {
    int stride = 10;             ///< record every stride-th step (plus the final one)
    double ell_floor_rel = 1e-3; ///< collapse guard relative to the critical length
    bool half_step = false;      ///< refine each step into two h/2 substeps
    bool assert_bounds = true;   ///< runtime speed/drift assertions along the run
    /// When false, per-sample multiplier/slopes come from the tables and
    /// energy is skipped (NaN); the endpoint path is identical either way.
    bool diagnostics = true;
    const EffectiveLaw* effective = nullptr; ///< required for the homogenized law
};

/// One explicit splitting step: the rear endpoint moves by its velocity
/// defect, the front by its own, then the rear snaps forward if the new
/// length would exceed the critical one. Throws on collapse below
/// ell_floor.
DropState step(const DropState& s, double h, const BetaProfile& beta, const SlopeTables& tables,
               double ell_floor);

/// Same splitting with the velocity defects replaced by the effective
/// law: rear speed -r(G(ell)), front speed r(H(ell)); beta drops out.
DropState step_homogenized(const DropState& s, double h, const EffectiveLaw& r,
                           const SlopeTables& tables, double ell_floor);

/// Advance from `initial` to time initial.t + T in steps of h, recording
/// samples. Initial data longer than the critical length are projected
/// (rear forward) with a warning on stderr.
Trajectory simulate(DropState initial, double T, double h, const BetaProfile& beta,
                    const SlopeTables& tables, VelocityLaw law = VelocityLaw::Raw,
                    const SimOptions& opt = {});

/// Result of an order-preservation check between two trajectories on the
/// same grid: worst signed margin (negative = violation) and where.
struct ComparisonReport {
    bool ordered = true;
    double worst_margin = 0.0;
    double worst_time = 0.0;
};

/// Verify a1(t) <= a2(t) + tol(t) and b1(t) <= b2(t) + tol(t) sample by
/// sample, with tol(t) = C * h * exp(K * (t - t0)); K should be beta's
/// Lipschitz constant. Requires matching grids.
ComparisonReport check_comparison(const Trajectory& t1, const Trajectory& t2, double K,
                                  double C = 10.0);

/// First sample time after which the forward difference of b stays above
/// eta for the rest of the trajectory; empty when that never happens.
/// Only meaningful in the sliding regime max beta - min beta < V0 * tilt,
/// and refuses otherwise.
std::optional<double> sliding_onset(const Trajectory& traj, double eta, const BetaProfile& beta);

} // namespace drops
