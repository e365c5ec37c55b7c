#pragma once

#include <string>
#include <vector>

namespace drops {

enum class BetaKind { Constant, Sine, PiecewiseLinear };

/// Contact-line mobility threshold beta(x) > 0 along the plane.
///
/// Either constant or periodic in x. The profile knows its own exact
/// range, Lipschitz constant, antiderivative and extremum locations,
/// which the homogenization quadrature and the sticking construction
/// rely on.
class BetaProfile {
  public:
    static BetaProfile constant(double value);
    /// mean + amplitude * sin(2*pi*x/period); requires 0 <= amplitude < mean.
    static BetaProfile sine(double mean, double amplitude, double period);
    /// Periodic piecewise-linear interpolation of (xs, values); xs must be
    /// strictly increasing inside [0, period), values positive. The segment
    /// from the last node wraps around to the first.
    static BetaProfile piecewise_linear(std::vector<double> xs, std::vector<double> values,
                                        double period);

    double operator()(double x) const;
    /// Exact integral of beta over [x0, x1].
    double integrate(double x0, double x1) const;

    BetaKind kind() const { return kind_; }
    bool is_constant() const { return kind_ == BetaKind::Constant; }
    double period() const { return period_; }
    double min() const { return min_; }
    double max() const { return max_; }
    double mean() const { return mean_; }
    double lipschitz() const { return lipschitz_; }
    /// True for profiles that are C^2 with a nondegenerate interior maximum.
    bool twice_differentiable() const { return kind_ == BetaKind::Sine && amp_ > 0.0; }

    /// Locations of global maxima (resp. minima) within [0, period).
    std::vector<double> maxima() const;
    std::vector<double> minima() const;

    /// The sped-up profile x -> beta(x/eps): same range, period scaled by eps.
    BetaProfile rescaled(double eps) const;

    std::string describe() const;

  private:
    BetaProfile() = default;

    BetaKind kind_ = BetaKind::Constant;
    double period_ = 1.0;
    double c0_ = 1.0;  // constant value or sine mean
    double amp_ = 0.0; // sine amplitude
    std::vector<double> xs_, vs_;
    std::vector<double> cum_; // cumulative integral at pwl nodes
    double min_ = 1.0, max_ = 1.0, mean_ = 1.0, lipschitz_ = 0.0;

    double pwl_value_in_period(double x) const;
    double pwl_integral_from_zero(double x) const;
};

} // namespace drops
