#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "drops/beta.hpp"
#include "drops/dynamics.hpp"
#include "drops/params.hpp"
#include "drops/tables.hpp"

namespace drops {

/// Effective contact-line velocity for driving strength q against the
/// periodic adhesion profile: zero on [min beta, max beta] (pinning
/// plateau), otherwise the harmonic-mean speed 1 / <1/(q - beta)> with
/// the sign of q - beta. The integral is regular for q outside the
/// plateau but degenerates like a square root at the edges; a
/// square-root substitution around each touching extremum keeps the
/// quadrature accurate arbitrarily close to them.
double effective_velocity(double q, const BetaProfile& beta, double tol = 1e-10);

/// Memoized form of the effective velocity, cheap enough to evaluate
/// inside a time stepper. Values are cached on a geometric ladder of
/// distances from the plateau edge (64 nodes per octave) and linearly
/// interpolated in that distance, which keeps the interpolation error
/// near 1e-6 for smooth profiles and preserves monotonicity. Thread
/// safe; copyable handles share one cache.
class EffectiveLaw {
  public:
    static EffectiveLaw from_beta(const BetaProfile& beta, double tol = 1e-10);

    /// Wrap an explicit velocity law (no caching, no interpolation).
    /// The plateau bounds only inform homogenized_tw_speed's bracketing.
    static EffectiveLaw from_function(std::function<double(double)> r,
                                      double plateau_min, double plateau_max);

    double operator()(double q) const;
    double plateau_min() const { return lo_; }
    double plateau_max() const { return hi_; }

  private:
    EffectiveLaw() = default;
    double node(long j, bool above) const;

    struct Cache {
        std::mutex mu;
        std::map<long, double> above, below;
    };

    std::optional<BetaProfile> beta_;
    std::function<double(double)> fn_;
    std::shared_ptr<Cache> cache_;
    double lo_ = 0.0;
    double hi_ = 0.0;
    double tol_ = 1e-10;
};

/// Diagnostics for how the effective velocity vanishes at the plateau
/// edge: fitted power q - max beta -> r over a dyadic ladder of offsets,
/// plus the largest observed r * log(1/offset) (bounded for profiles
/// with corner maxima, where the square-root law degrades to 1/log).
struct DegeneracyFit {
    double exponent;
    double log_law_bound;
    bool smooth; ///< profile reported twice differentiable
};

DegeneracyFit sqrt_degeneracy_check(const BetaProfile& beta);

/// One entry of an oscillation-scale sweep: sup-norm endpoint gaps
/// between the raw trajectory over beta(x / eps) and the homogenized
/// trajectory, on the shared time grid.
struct SweepPoint {
    double eps;
    double sup_err_a;
    double sup_err_b;
};

/// Run the homogenized trajectory once and one raw trajectory per
/// epsilon (in parallel), all with step h on [0, T]. The list must be
/// strictly decreasing; h must resolve the fastest oscillation
/// (h <= eps_min * period / (10 * speed bound)) or the sweep refuses.
std::vector<SweepPoint> epsilon_sweep(DropState initial, double T,
                                      const BetaProfile& beta,
                                      const std::vector<double>& eps_list,
                                      double h, const SlopeTables& tables);

} // namespace drops
