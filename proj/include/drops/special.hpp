#pragma once

#include <cmath>

// Stable scalar kernels for the hyperbolic-basis equilibrium solve.
//
// Every ratio below has a removable singularity at 0. Evaluating the
// defining expression directly cancels catastrophically for small
// arguments once the leading 1 is subtracted, so each function switches
// to a truncated Taylor series below a crossover chosen so that both
// branches agree to ~1e-12 relative at the seam (covered by tests).
// All direct branches degrade gracefully for large arguments:
// sinh overflow turns x/sinh(x) into a clean 0.

namespace drops::detail {

/// sinh(x)/x, equal to 1 at x = 0.
inline double sinhc(double x) {
    if (x == 0.0) return 1.0;
    return std::sinh(x) / x;
}

/// tanh(x)/x, equal to 1 at x = 0.
inline double tanhc(double x) {
    if (x == 0.0) return 1.0;
    return std::tanh(x) / x;
}

/// (1 - tanh(x)/x) / x^2, equal to 1/3 at x = 0.
inline double one_minus_tanhc(double x) {
    const double x2 = x * x;
    if (x2 < 0.0625) { // |x| < 0.25
        return 1.0 / 3 +
               x2 * (-2.0 / 15 +
                     x2 * (17.0 / 315 +
                           x2 * (-62.0 / 2835 +
                                 x2 * (1382.0 / 155925 +
                                       x2 * (-21844.0 / 6081075 +
                                             x2 * (929569.0 / 638512875 +
                                                   x2 * (-6404582.0 / 10854718875.0)))))));
    }
    return (1.0 - std::tanh(x) / x) / x2;
}

/// (1 - x/sinh(x)) / x^2, equal to 1/6 at x = 0.
inline double one_minus_invsinhc(double x) {
    const double x2 = x * x;
    if (x2 < 0.25) { // |x| < 0.5
        return 1.0 / 6 +
               x2 * (-7.0 / 360 +
                     x2 * (31.0 / 15120 +
                           x2 * (-127.0 / 604800 +
                                 x2 * (73.0 / 3421440 +
                                       x2 * (-1414477.0 / 653837184000.0 +
                                             x2 * (8191.0 / 37362124800.0))))));
    }
    return (1.0 - x / std::sinh(x)) / x2;
}

/// (x*coth(x) - 1) / x^2, equal to 1/3 at x = 0.
inline double xcoth_minus_one(double x) {
    const double x2 = x * x;
    if (x2 < 0.25) {
        return 1.0 / 3 +
               x2 * (-1.0 / 45 +
                     x2 * (2.0 / 945 +
                           x2 * (-1.0 / 4725 +
                                 x2 * (2.0 / 93555 +
                                       x2 * (-1382.0 / 638512875.0 +
                                             x2 * (4.0 / 18243225.0))))));
    }
    return (x / std::tanh(x) - 1.0) / x2;
}

/// (cosh(m*p) - cosh(m*q)) / m^2 for |q| <= |p|, stable as m -> 0
/// where it tends to (p^2 - q^2)/2.
inline double cosh_diff(double m, double p, double q) {
    if (m * std::abs(p) < 0.5) {
        const double p2 = p * p, q2 = q * q, m2 = m * m;
        double pk = p2, qk = q2, mk = 1.0, fact = 2.0, sum = 0.0;
        for (int k = 1; k <= 9; ++k) {
            sum += mk * (pk - qk) / fact;
            pk *= p2;
            qk *= q2;
            mk *= m2;
            fact *= double(2 * k + 1) * double(2 * k + 2);
        }
        return sum;
    }
    return (std::cosh(m * p) - std::cosh(m * q)) / (m * m);
}

/// (sinhc(m*p) - sinhc(m*q)) / m^2 for |q| <= |p|, stable as m -> 0
/// where it tends to (p^2 - q^2)/6.
inline double sinhc_diff(double m, double p, double q) {
    if (m * std::abs(p) < 0.5) {
        const double p2 = p * p, q2 = q * q, m2 = m * m;
        double pk = p2, qk = q2, mk = 1.0, fact = 6.0, sum = 0.0;
        for (int k = 1; k <= 9; ++k) {
            sum += mk * (pk - qk) / fact;
            pk *= p2;
            qk *= q2;
            mk *= m2;
            fact *= double(2 * k + 2) * double(2 * k + 3);
        }
        return sum;
    }
    return (sinhc(m * p) - sinhc(m * q)) / (m * m);
}

} // namespace drops::detail
