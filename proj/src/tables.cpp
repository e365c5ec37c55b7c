#include "drops/tables.hpp"

#include <algorithm>
#include <cmath>

#include "drops/equilibrium.hpp"

namespace drops {

CriticalLength critical_length(const PhysicalParams& p) {
    if (p.tilt == 0.0) return {false, 0.0};
    // The rear slope is positive for small supports (the volume term
    // dominates) and eventually negative on a tilted plane; bracket the
    // sign change around the natural volume scale, then bisect.
    double lo = std::cbrt(p.V0);
    int guard = 0;
    while (endpoint_data(lo, p).slope_a <= 0.0) {
        lo *= 0.5;
        if (++guard > 600) throw NumericalError("critical length: no positive lower bracket");
    }
    double hi = lo;
    guard = 0;
    while (endpoint_data(hi, p).slope_a > 0.0) {
        hi *= 2.0;
        if (++guard > 600) throw NumericalError("critical length: no negative upper bracket");
    }
    while (hi - lo > 1e-10 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (endpoint_data(mid, p).slope_a > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return {true, 0.5 * (lo + hi)};
}

SlopeTables::Node SlopeTables::exact(double ell, const PhysicalParams& p) {
    const EndpointData e = endpoint_data(ell, p);
    return {ell,      0.5 * e.slope_a * e.slope_a, 0.5 * e.slope_b * e.slope_b,
            e.lambda, e.slope_a,                   e.slope_b};
}

SlopeTables::SlopeTables(const PhysicalParams& p, const Options& opt)
    : p_(p), opt_(opt), ell_c_(critical_length(p)) {
    if (ell_c_.finite) {
        // Constrained regime: the rear slope is pinned to zero and the
        // front one to the value forced by H - G = tilt * V0.
        const Node at_c = exact(ell_c_.value, p_);
        plateau_ = Node{ell_c_.value, 0.0,  p_.tilt * p_.V0,
                        at_c.lambda,  0.0, -std::sqrt(2.0 * p_.tilt * p_.V0)};
    }
    if (!ell_c_.finite || opt_.interp_tol <= 0.0) return; // closed form on every query
    floor_ = ell_c_.value * opt_.grid_floor_rel;
    const int n = std::max(1, opt_.initial_cells);
    std::vector<Node> coarse;
    coarse.reserve(std::size_t(n) + 1);
    for (int i = 0; i <= n; ++i) {
        const double s = double(i) / n;
        coarse.push_back(exact(floor_ + s * (ell_c_.value - floor_), p_));
    }
    nodes_.reserve(std::size_t(4) * n);
    for (int i = 0; i < n; ++i) refine(coarse[std::size_t(i)], coarse[std::size_t(i) + 1], 0);
    nodes_.push_back(coarse.back());
}

void SlopeTables::refine(const Node& lo, const Node& hi, int depth) {
    if (depth < opt_.max_depth) {
        const Node mid = exact(0.5 * (lo.ell + hi.ell), p_);
        auto off = [&](double a, double b, double m) {
            return std::abs(0.5 * (a + b) - m) > opt_.interp_tol * std::max(1.0, std::abs(m));
        };
        if (off(lo.G, hi.G, mid.G) || off(lo.H, hi.H, mid.H) ||
            off(lo.lambda, hi.lambda, mid.lambda) ||
            off(lo.slope_a, hi.slope_a, mid.slope_a) ||
            off(lo.slope_b, hi.slope_b, mid.slope_b)) {
            refine(lo, mid, depth + 1);
            refine(mid, hi, depth + 1);
            return;
        }
    }
    nodes_.push_back(lo);
}

SlopeTables::Node SlopeTables::lookup(double ell) const {
    if (ell_c_.finite && ell >= ell_c_.value) return plateau_;
    if (nodes_.empty() || ell < floor_) return exact(ell, p_);
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), ell,
                               [](double v, const Node& n) { return v < n.ell; });
    if (it == nodes_.begin()) return nodes_.front();
    if (it == nodes_.end()) return nodes_.back();
    const Node& n1 = *it;
    const Node& n0 = *(it - 1);
    const double s = (ell - n0.ell) / (n1.ell - n0.ell);
    Node out;
    out.ell = ell;
    out.G = n0.G + s * (n1.G - n0.G);
    out.H = n0.H + s * (n1.H - n0.H);
    out.lambda = n0.lambda + s * (n1.lambda - n0.lambda);
    out.slope_a = n0.slope_a + s * (n1.slope_a - n0.slope_a);
    out.slope_b = n0.slope_b + s * (n1.slope_b - n0.slope_b);
    return out;
}

double SlopeTables::G(double ell) const { return lookup(ell).G; }
double SlopeTables::H(double ell) const { return lookup(ell).H; }
double SlopeTables::F(double ell) const {
    const Node n = lookup(ell);
    return n.G + n.H;
}
std::pair<double, double> SlopeTables::GH(double ell) const {
    const Node n = lookup(ell);
    return {n.G, n.H};
}
double SlopeTables::lambda(double ell) const { return lookup(ell).lambda; }
double SlopeTables::slope_a(double ell) const { return lookup(ell).slope_a; }
double SlopeTables::slope_b(double ell) const { return lookup(ell).slope_b; }

} // namespace drops
