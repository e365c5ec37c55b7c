#include "drops/equilibrium.hpp"

#include <cmath>

#include "drops/quadrature.hpp"
#include "drops/special.hpp"
#include "drops/tables.hpp"

namespace drops {

namespace {

void check_interval(double a, double b) {
    if (!(std::isfinite(a) && std::isfinite(b) && b > a))
        throw ConfigError("contact points must be finite with a < b");
}

} // namespace

EndpointData endpoint_data(double ell, const PhysicalParams& p) {
    if (!(std::isfinite(ell) && ell > 0.0))
        throw ConfigError("support length must be finite and > 0");
    const double m = std::sqrt(p.k2);
    const double t = m * ell;
    const double y = 0.5 * t;
    const double omt = detail::one_minus_tanhc(y);
    // Integrals of the two basis modes over the support; the multiplier
    // is whatever makes the total volume come out to V0.
    const double i1 = ell * ell * ell * omt / 4.0;
    const double i2 = -p.tilt * ell * ell * ell * ell * omt / 8.0;
    const double lambda = (p.V0 - i2) / i1;
    const double half_tanhc = 0.5 * ell * detail::tanhc(y);
    const double ell2 = ell * ell;
    const double sa = lambda * half_tanhc - p.tilt * ell2 * detail::xcoth_minus_one(t);
    const double sb = -lambda * half_tanhc + p.tilt * ell2 * detail::one_minus_invsinhc(t);
    return {lambda, sa, sb};
}

EquilibriumProfile::EquilibriumProfile(const PhysicalParams& p, double a, double b,
                                       double support_left)
    : p_(p), a_(a), b_(b), support_left_(support_left) {
    check_interval(a, b);
    if (!(support_left >= a && support_left < b))
        throw ConfigError("support must be a sub-interval of [a, b] ending at b");
    const EndpointData e = endpoint_data(b - support_left, p);
    lambda_ = e.lambda;
    slope_a_ = e.slope_a;
    slope_b_ = e.slope_b;
}

double EquilibriumProfile::operator()(double x) const {
    if (x <= support_left_ || x >= b_) return 0.0;
    const double ell = b_ - support_left_;
    const double xi = x - b_;          // in (-ell, 0)
    const double chi = xi + 0.5 * ell; // centered coordinate
    const double m = std::sqrt(p_.k2);
    const double t = m * ell;
    double v1, v2;
    if (t <= 30.0) {
        v1 = detail::cosh_diff(m, 0.5 * ell, chi) / std::cosh(0.5 * t);
        v2 = p_.tilt * xi * detail::sinhc_diff(m, ell, xi) / detail::sinhc(t);
    } else {
        // Saturated regime: exponentials of nonpositive arguments only,
        // so nothing overflows no matter how large t gets.
        const double y = 0.5 * t;
        const double mc = m * std::abs(chi);
        const double d =
            (mc - y) + std::log1p(std::exp(-2.0 * mc)) - std::log1p(std::exp(-2.0 * y));
        v1 = -std::expm1(d) / p_.k2;
        const double mxi = -m * xi;
        const double ratio =
            std::exp(mxi - t) * (1.0 - std::exp(-2.0 * mxi)) / (1.0 - std::exp(-2.0 * t));
        v2 = (p_.tilt / p_.k2) * (xi + ell * ratio);
    }
    return lambda_ * v1 + v2;
}

double EquilibriumProfile::derivative(double x) const {
    if (x < support_left_ || x > b_) return 0.0;
    const double ell = b_ - support_left_;
    const double xi = x - b_;
    const double chi = xi + 0.5 * ell;
    const double m = std::sqrt(p_.k2);
    const double t = m * ell;
    double d1, d2;
    if (t <= 30.0) {
        d1 = -chi * detail::sinhc(m * chi) / std::cosh(0.5 * t);
        const double core = detail::sinhc_diff(m, ell, 0.0) - detail::cosh_diff(m, xi, 0.0);
        d2 = p_.tilt * core / detail::sinhc(t);
    } else {
        const double y = 0.5 * t;
        const double mc = m * std::abs(chi);
        const double sgn = (chi >= 0.0) ? 1.0 : -1.0;
        d1 = -sgn * std::exp(mc - y) * (1.0 - std::exp(-2.0 * mc)) /
             ((1.0 + std::exp(-2.0 * y)) * m);
        const double mxi = -m * xi;
        const double cr =
            std::exp(mxi - t) * (1.0 + std::exp(-2.0 * mxi)) / (1.0 - std::exp(-2.0 * t));
        d2 = (p_.tilt / p_.k2) * (1.0 - t * cr);
    }
    return lambda_ * d1 + d2;
}

EquilibriumProfile solve_bvp(double a, double b, const PhysicalParams& p) {
    check_interval(a, b);
    return EquilibriumProfile(p, a, b, a);
}

EquilibriumProfile solve_obstacle(double a, double b, const PhysicalParams& p, double ell_crit) {
    check_interval(a, b);
    if (!(ell_crit > 0.0)) throw ConfigError("critical support length must be > 0");
    const double support_left = (b - a > ell_crit) ? b - ell_crit : a;
    return EquilibriumProfile(p, a, b, support_left);
}

EquilibriumProfile solve_obstacle(double a, double b, const PhysicalParams& p) {
    return solve_obstacle(a, b, p, critical_length(p).or_infinity());
}

bool is_nonnegative(const EquilibriumProfile& u) { return u.slope_a() >= 0.0; }

double surface_energy(const EquilibriumProfile& u) {
    const double k2 = u.params().k2;
    const double tilt = u.params().tilt;
    auto density = [&](double x) {
        const double h = u(x);
        const double s = u.derivative(x);
        return 0.5 * s * s + 0.5 * k2 * h * h - tilt * x * h;
    };
    return integrate(density, u.support_left(), u.b());
}

double total_energy(const EquilibriumProfile& u, const BetaProfile& beta) {
    return surface_energy(u) + beta.integrate(u.support_left(), u.b());
}

} // namespace drops
