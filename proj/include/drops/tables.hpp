#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "drops/params.hpp"

namespace drops {

/// The largest support length for which the unconstrained profile stays
/// nonnegative. Infinite on a horizontal plane (tilt == 0), finite once
/// the plane is tilted.
struct CriticalLength {
    bool finite;
    double value; ///< meaningful only when finite
    double or_infinity() const {
        return finite ? value : std::numeric_limits<double>::infinity();
    }
};

/// Root of the rear contact slope as a function of support length,
/// bisected to ~1e-10 relative accuracy.
CriticalLength critical_length(const PhysicalParams& p);

/// Precomputed contact-slope energies as functions of the distance
/// ell = b - a between the contact lines.
///
///   G(ell) = slope_a^2 / 2   (rear),  H(ell) = slope_b^2 / 2  (front),
///
/// both evaluated on the constrained profile, so past the critical
/// length G vanishes and H freezes at tilt * V0. Between those regimes
/// the values come from a piecewise-linear table built once at
/// construction by dyadic refinement until mid-cell interpolation error
/// drops below `interp_tol` (relative near the small-ell blowup). G and
/// H interpolate from shared nodes, which keeps the exact identity
/// H - G = tilt * V0 intact through interpolation. Queries below the
/// grid floor, on an untilted plane, or with interp_tol <= 0 fall back
/// to the closed form. Immutable after construction, safe to share
/// across threads.
class SlopeTables {
  public:
    struct Options {
        double interp_tol = 1e-7; ///< <= 0 disables the grid entirely
        int initial_cells = 64;
        int max_depth = 20;
        double grid_floor_rel = 1.0 / 64; ///< exact solve below ell_c * this
    };

    explicit SlopeTables(const PhysicalParams& p) : SlopeTables(p, Options{}) {}
    SlopeTables(const PhysicalParams& p, const Options& opt);

    double G(double ell) const;
    double H(double ell) const;
    /// G + H, the total contact-slope energy.
    double F(double ell) const;
    /// Both at once from one lookup.
    std::pair<double, double> GH(double ell) const;

    double lambda(double ell) const;
    double slope_a(double ell) const;
    double slope_b(double ell) const;

    const CriticalLength& ell_c() const { return ell_c_; }
    const PhysicalParams& params() const { return p_; }
    std::size_t grid_size() const { return nodes_.size(); }

  private:
    struct Node {
        double ell, G, H, lambda, slope_a, slope_b;
    };

    static Node exact(double ell, const PhysicalParams& p);
    void refine(const Node& lo, const Node& hi, int depth);
    Node lookup(double ell) const;

    PhysicalParams p_;
    Options opt_;
    CriticalLength ell_c_;
    double floor_ = 0.0; ///< smallest tabulated ell (0 when no grid)
    Node plateau_{};     ///< constrained values for ell >= ell_c
    std::vector<Node> nodes_;
};

} // namespace drops
