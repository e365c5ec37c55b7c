#pragma once

#include "drops/beta.hpp"
#include "drops/params.hpp"

namespace drops {

/// Endpoint quantities of the volume-constrained profile on an interval
/// of length ell: the multiplier enforcing the volume and the one-sided
/// contact slopes. Everything downstream (tables, dynamics, waves) is
/// driven by these three numbers.
struct EndpointData {
    double lambda;
    double slope_a; ///< u'(a+), rear (uphill) contact slope
    double slope_b; ///< u'(b-), front (downhill) contact slope
};

/// Closed-form endpoint data for support length ell > 0. Stable for all
/// parameter ranges: small k2*ell^2 goes through series kernels, large
/// arguments through saturating ratios.
EndpointData endpoint_data(double ell, const PhysicalParams& p);

/// The equilibrium height profile on [a, b] with prescribed volume.
///
/// When the positivity constraint binds, the profile is identically zero
/// on [a, support_left] and positive on (support_left, b); otherwise
/// support_left == a. Height and slope evaluate in closed form.
class EquilibriumProfile {
  public:
    EquilibriumProfile(const PhysicalParams& p, double a, double b, double support_left);

    double operator()(double x) const;  ///< height, 0 outside the support
    double derivative(double x) const;  ///< slope, 0 outside [support_left, b]

    const PhysicalParams& params() const { return p_; }
    double a() const { return a_; }
    double b() const { return b_; }
    double support_left() const { return support_left_; }
    /// Length of the wetted region (b - support_left).
    double ell() const { return b_ - support_left_; }
    double lambda() const { return lambda_; }
    double slope_a() const { return slope_a_; }
    double slope_b() const { return slope_b_; }
    bool touches_constraint() const { return support_left_ > a_; }

  private:
    PhysicalParams p_;
    double a_, b_, support_left_;
    double lambda_, slope_a_, slope_b_;
};

/// Volume-constrained two-point solve on (a, b), ignoring positivity.
EquilibriumProfile solve_bvp(double a, double b, const PhysicalParams& p);

/// Volume-constrained solve on (a, b) with the nonnegativity constraint:
/// when b - a exceeds the critical support length the drop detaches from
/// the rear contact line and the support shrinks to (b - ell_crit, b).
EquilibriumProfile solve_obstacle(double a, double b, const PhysicalParams& p);
/// Same, with the critical length precomputed (pass +infinity when the
/// profile stays positive for every length).
EquilibriumProfile solve_obstacle(double a, double b, const PhysicalParams& p, double ell_crit);

/// True when the unconstrained profile on (a, b) is nonnegative, i.e.
/// the rear contact slope is >= 0.
bool is_nonnegative(const EquilibriumProfile& u);

/// Interface part of the energy over the wetted region:
/// integral of u'^2/2 + k2 u^2/2 - tilt * x * u.
double surface_energy(const EquilibriumProfile& u);

/// Full energy: surface part plus the wetting cost, the integral of beta
/// over the support.
double total_energy(const EquilibriumProfile& u, const BetaProfile& beta);

} // namespace drops
