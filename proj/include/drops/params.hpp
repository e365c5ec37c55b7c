#pragma once

#include <stdexcept>

namespace drops {

/// Bad user-supplied configuration or a request outside the model's domain.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A numerical procedure failed to deliver its contract (non-convergence,
/// collapse, loss of a required sign condition).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Material and geometry constants of a drop on an inclined plane.
///
/// V0 is the prescribed cross-sectional area of the drop (its volume per
/// unit span of the contact line). kappa >= 0 measures gravity against
/// surface tension and alpha in [0, pi/2) is the inclination angle.
/// The profile equation only ever sees the two derived combinations:
/// k2 = kappa*cos(alpha) (flattening) and tilt = kappa*sin(alpha)
/// (downhill forcing).
struct PhysicalParams {
    double V0;
    double kappa;
    double alpha;
    double k2;
    double tilt;

    PhysicalParams(double V0_, double kappa_, double alpha_);
};

} // namespace drops
