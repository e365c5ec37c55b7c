#include "drops/beta.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "drops/params.hpp"

namespace drops {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap(double x, double period) {
    double r = std::fmod(x, period);
    if (r < 0.0) r += period;
    return r;
}
} // namespace

BetaProfile BetaProfile::constant(double value) {
    if (!(std::isfinite(value) && value > 0.0))
        throw ConfigError("beta.value must be finite and > 0");
    BetaProfile b;
    b.kind_ = BetaKind::Constant;
    b.c0_ = value;
    b.min_ = b.max_ = b.mean_ = value;
    b.lipschitz_ = 0.0;
    b.period_ = 1.0;
    return b;
}

BetaProfile BetaProfile::sine(double mean, double amplitude, double period) {
    if (!(std::isfinite(mean) && mean > 0.0)) throw ConfigError("beta.mean must be finite and > 0");
    if (!(std::isfinite(amplitude) && amplitude >= 0.0 && amplitude < mean))
        throw ConfigError("beta.amplitude must satisfy 0 <= amplitude < mean (beta stays positive)");
    if (!(std::isfinite(period) && period > 0.0))
        throw ConfigError("beta.period must be finite and > 0");
    BetaProfile b;
    b.kind_ = BetaKind::Sine;
    b.c0_ = mean;
    b.amp_ = amplitude;
    b.period_ = period;
    b.min_ = mean - amplitude;
    b.max_ = mean + amplitude;
    b.mean_ = mean;
    b.lipschitz_ = kTwoPi * amplitude / period;
    return b;
}

BetaProfile BetaProfile::piecewise_linear(std::vector<double> xs, std::vector<double> values,
                                          double period) {
    if (!(std::isfinite(period) && period > 0.0))
        throw ConfigError("beta.period must be finite and > 0");
    if (xs.size() != values.size() || xs.empty())
        throw ConfigError("beta.nodes must supply matching nonempty x and value lists");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(std::isfinite(xs[i]) && xs[i] >= 0.0 && xs[i] < period))
            throw ConfigError("beta.nodes x-coordinates must lie in [0, period)");
        if (i > 0 && !(xs[i] > xs[i - 1]))
            throw ConfigError("beta.nodes x-coordinates must be strictly increasing");
        if (!(std::isfinite(values[i]) && values[i] > 0.0))
            throw ConfigError("beta.nodes values must be finite and > 0");
    }
    BetaProfile b;
    b.kind_ = BetaKind::PiecewiseLinear;
    b.period_ = period;
    b.xs_ = std::move(xs);
    b.vs_ = std::move(values);
    b.min_ = *std::min_element(b.vs_.begin(), b.vs_.end());
    b.max_ = *std::max_element(b.vs_.begin(), b.vs_.end());
    // Per-segment integrals (trapezoids), wrap segment last.
    const std::size_t n = b.xs_.size();
    b.cum_.assign(n + 1, 0.0);
    double lip = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x0 = b.xs_[i];
        const double x1 = (i + 1 < n) ? b.xs_[i + 1] : b.xs_[0] + period;
        const double v0 = b.vs_[i];
        const double v1 = (i + 1 < n) ? b.vs_[i + 1] : b.vs_[0];
        const double dx = x1 - x0;
        b.cum_[i + 1] = b.cum_[i] + 0.5 * (v0 + v1) * dx;
        if (dx > 0.0) lip = std::max(lip, std::abs(v1 - v0) / dx);
    }
    b.lipschitz_ = lip;
    b.mean_ = b.cum_[n] / period;
    return b;
}

double BetaProfile::pwl_value_in_period(double x) const {
    // x is relative to xs_[0], in [0, period).
    const std::size_t n = xs_.size();
    auto it = std::upper_bound(xs_.begin(), xs_.end(), xs_[0] + x);
    const std::size_t i = (it == xs_.begin()) ? n - 1 : std::size_t(it - xs_.begin()) - 1;
    const double x0 = xs_[i];
    const double x1 = (i + 1 < n) ? xs_[i + 1] : xs_[0] + period_;
    const double v0 = vs_[i];
    const double v1 = (i + 1 < n) ? vs_[i + 1] : vs_[0];
    const double s = (x1 > x0) ? (xs_[0] + x - x0) / (x1 - x0) : 0.0;
    return v0 + s * (v1 - v0);
}

double BetaProfile::operator()(double x) const {
    switch (kind_) {
        case BetaKind::Constant: return c0_;
        case BetaKind::Sine: return c0_ + amp_ * std::sin(kTwoPi * x / period_);
        case BetaKind::PiecewiseLinear: return pwl_value_in_period(wrap(x - xs_[0], period_));
    }
    return c0_;
}

double BetaProfile::pwl_integral_from_zero(double x) const {
    // Integral of the profile over [xs_[0], xs_[0] + x] for x in [0, period).
    const std::size_t n = xs_.size();
    auto it = std::upper_bound(xs_.begin(), xs_.end(), xs_[0] + x);
    const std::size_t i = (it == xs_.begin()) ? n - 1 : std::size_t(it - xs_.begin()) - 1;
    const double x0 = xs_[i];
    const double x1 = (i + 1 < n) ? xs_[i + 1] : xs_[0] + period_;
    const double v0 = vs_[i];
    const double v1 = (i + 1 < n) ? vs_[i + 1] : vs_[0];
    const double t = xs_[0] + x - x0;
    const double slope = (x1 > x0) ? (v1 - v0) / (x1 - x0) : 0.0;
    return cum_[i] + v0 * t + 0.5 * slope * t * t;
}

double BetaProfile::integrate(double x0, double x1) const {
    if (x1 < x0) return -integrate(x1, x0);
    switch (kind_) {
        case BetaKind::Constant: return c0_ * (x1 - x0);
        case BetaKind::Sine: {
            const double w = kTwoPi / period_;
            return c0_ * (x1 - x0) - (amp_ / w) * (std::cos(w * x1) - std::cos(w * x0));
        }
        case BetaKind::PiecewiseLinear: {
            const double per_period = cum_.back();
            const double r0 = wrap(x0 - xs_[0], period_);
            const double len = x1 - x0;
            const double full = std::floor((r0 + len) / period_);
            const double r1 = r0 + len - full * period_;
            return full * per_period + pwl_integral_from_zero(r1) - pwl_integral_from_zero(r0);
        }
    }
    return 0.0;
}

std::vector<double> BetaProfile::maxima() const {
    switch (kind_) {
        case BetaKind::Constant: return {0.0};
        case BetaKind::Sine: return {0.25 * period_};
        case BetaKind::PiecewiseLinear: {
            std::vector<double> out;
            for (std::size_t i = 0; i < xs_.size(); ++i)
                if (vs_[i] == max_) out.push_back(xs_[i]);
            return out;
        }
    }
    return {0.0};
}

std::vector<double> BetaProfile::minima() const {
    switch (kind_) {
        case BetaKind::Constant: return {0.0};
        case BetaKind::Sine: return {0.75 * period_};
        case BetaKind::PiecewiseLinear: {
            std::vector<double> out;
            for (std::size_t i = 0; i < xs_.size(); ++i)
                if (vs_[i] == min_) out.push_back(xs_[i]);
            return out;
        }
    }
    return {0.0};
}

BetaProfile BetaProfile::rescaled(double eps) const {
    if (!(std::isfinite(eps) && eps > 0.0)) throw ConfigError("rescale factor must be > 0");
    switch (kind_) {
        case BetaKind::Constant: return *this;
        case BetaKind::Sine: return sine(c0_, amp_, period_ * eps);
        case BetaKind::PiecewiseLinear: {
            std::vector<double> xs = xs_;
            for (double& x : xs) x *= eps;
            return piecewise_linear(std::move(xs), vs_, period_ * eps);
        }
    }
    return *this;
}

std::string BetaProfile::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case BetaKind::Constant: os << "constant(" << c0_ << ")"; break;
        case BetaKind::Sine:
            os << "sine(mean=" << c0_ << ",amplitude=" << amp_ << ",period=" << period_ << ")";
            break;
        case BetaKind::PiecewiseLinear:
            os << "pwl(n=" << xs_.size() << ",period=" << period_ << ")";
            break;
    }
    return os.str();
}

} // namespace drops
