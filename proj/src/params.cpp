#include "drops/params.hpp"

#include <cmath>
#include <string>

namespace drops {

namespace {
constexpr double kHalfPi = 1.5707963267948966;
}

PhysicalParams::PhysicalParams(double V0_, double kappa_, double alpha_)
    : V0(V0_), kappa(kappa_), alpha(alpha_) {
    if (!(std::isfinite(V0) && V0 > 0.0))
        throw ConfigError("params.V0 must be finite and > 0, got " + std::to_string(V0));
    if (!(std::isfinite(kappa) && kappa >= 0.0))
        throw ConfigError("params.kappa must be finite and >= 0, got " + std::to_string(kappa));
    if (!(std::isfinite(alpha) && alpha >= 0.0 && alpha < kHalfPi))
        throw ConfigError("params.alpha must lie in [0, pi/2), got " + std::to_string(alpha));
    k2 = kappa * std::cos(alpha);
    tilt = kappa * std::sin(alpha);
}

} // namespace drops
