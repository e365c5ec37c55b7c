#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace drops {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
    std::vector<double> node;
    std::vector<double> weight;
    explicit GaussLegendre(int order);
};

/// Shared per-order rule (nodes are computed once and cached).
const GaussLegendre& gauss_legendre(int order);

/// Composite fixed-order Gauss-Legendre rule over [lo, hi].
template <class F>
double integrate(F&& f, double lo, double hi, int panels = 8, int order = 16) {
    const GaussLegendre& g = gauss_legendre(order);
    const double w = (hi - lo) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = lo + (p + 0.5) * w;
        double s = 0.0;
        for (std::size_t i = 0; i < g.node.size(); ++i)
            s += g.weight[i] * f(mid + 0.5 * w * g.node[i]);
        sum += 0.5 * w * s;
    }
    return sum;
}

namespace detail {
template <class F>
double adapt(F& f, double lo, double hi, double whole, double tol, double rel_floor,
             int depth) {
    const double mid = 0.5 * (lo + hi);
    const double left = integrate(f, lo, mid, 1, 16);
    const double right = integrate(f, mid, hi, 1, 16);
    const double err = (left + right) - whole;
    // Accept once the disagreement is at the integrand's own noise level;
    // chasing tolerances the arithmetic cannot reach explodes the panel
    // count instead of adding digits.
    const double floor = rel_floor * (std::abs(left) + std::abs(right));
    if (depth <= 0 || std::abs(err) <= std::max(tol, floor)) return left + right;
    return adapt(f, lo, mid, left, 0.5 * tol, rel_floor, depth - 1) +
           adapt(f, mid, hi, right, 0.5 * tol, rel_floor, depth - 1);
}
} // namespace detail

/// Adaptive bisection on top of the fixed rule; `tol` is absolute.
/// `rel_floor` is the relative evaluation noise of the integrand: the
/// default covers plain rounding, but integrands whose evaluation
/// cancels (e.g. 1/(q - beta) with q near an extremum of beta) must pass
/// their condition number times machine epsilon, or the refinement
/// chases noise.
template <class F>
double integrate_adaptive(F&& f, double lo, double hi, double tol,
                          double rel_floor = 4e-16, int max_depth = 48) {
    const double whole = integrate(f, lo, hi, 1, 16);
    return detail::adapt(f, lo, hi, whole, tol, rel_floor, max_depth);
}

} // namespace drops
