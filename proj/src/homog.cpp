#include "drops/homog.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <utility>

#include "drops/quadrature.hpp"

namespace drops {

double effective_velocity(double q, const BetaProfile& beta, double tol) {
    if (!std::isfinite(q))
        throw ConfigError("effective velocity: q must be finite");
    if (beta.is_constant())
        return q - beta.min();
    if (q >= beta.min() && q <= beta.max())
        return 0.0;

    const bool above = q > beta.max();
    const double P = beta.period();

    // Work in period-normalized coordinates; the harmonic mean is
    // invariant under the rescale.
    auto bhat = [&](double x) { return beta(P * x); };
    auto g = [&](double x) {
        return above ? 1.0 / (q - bhat(x)) : 1.0 / (bhat(x) - q);
    };

    // The integrand peaks at the extrema that touch the plateau edge,
    // so split there and substitute x = x0 +/- u^2 on each half.
    std::vector<double> sing = above ? beta.maxima() : beta.minima();
    for (double& s : sing)
        s /= P;
    std::sort(sing.begin(), sing.end());

    // Evaluating q - beta cancels, so near the plateau edge the integrand
    // carries noise of order eps * (q - far edge) / (q - near edge); tell
    // the quadrature where its digits actually end.
    const double gap = above ? q - beta.max() : beta.min() - q;
    const double span = above ? q - beta.min() : beta.max() - q;
    const double noise = 4e-16 * std::max(1.0, span / gap);

    double total = 0.0;
    for (std::size_t i = 0; i < sing.size(); ++i) {
        const double s0 = sing[i];
        const double s1 = (i + 1 < sing.size()) ? sing[i + 1] : sing.front() + 1.0;
        const double mid = 0.5 * (s0 + s1);
        auto left = [&](double u) { return 2.0 * u * g(s0 + u * u); };
        auto right = [&](double u) { return 2.0 * u * g(s1 - u * u); };
        total += integrate_adaptive(left, 0.0, std::sqrt(mid - s0), tol, noise);
        total += integrate_adaptive(right, 0.0, std::sqrt(s1 - mid), tol, noise);
    }
    return above ? 1.0 / total : -1.0 / total;
}

namespace {
constexpr long kNodesPerOctave = 64;
} // namespace

EffectiveLaw EffectiveLaw::from_beta(const BetaProfile& beta, double tol) {
    EffectiveLaw law;
    law.beta_ = beta;
    law.lo_ = beta.min();
    law.hi_ = beta.max();
    law.tol_ = tol;
    law.cache_ = std::make_shared<Cache>();
    return law;
}

EffectiveLaw EffectiveLaw::from_function(std::function<double(double)> r,
                                         double plateau_min, double plateau_max) {
    if (!r)
        throw ConfigError("effective law: empty function");
    if (!(plateau_min <= plateau_max))
        throw ConfigError("effective law: plateau bounds out of order");
    EffectiveLaw law;
    law.fn_ = std::move(r);
    law.lo_ = plateau_min;
    law.hi_ = plateau_max;
    return law;
}

double EffectiveLaw::node(long j, bool above) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto& side = above ? cache_->above : cache_->below;
        auto it = side.find(j);
        if (it != side.end())
            return it->second;
    }
    const double d = std::exp2(double(j) / double(kNodesPerOctave));
    const double q = above ? hi_ + d : lo_ - d;
    const double value = effective_velocity(q, *beta_, tol_);
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto& side = above ? cache_->above : cache_->below;
    return side.emplace(j, value).first->second;
}

double EffectiveLaw::operator()(double q) const {
    if (fn_)
        return fn_(q);
    if (!std::isfinite(q))
        throw ConfigError("effective law: q must be finite");
    if (q >= lo_ && q <= hi_)
        return 0.0;
    if (beta_->is_constant())
        return q - lo_;
    const bool above = q > hi_;
    const double d = above ? q - hi_ : lo_ - q;
    const double jr = double(kNodesPerOctave) * std::log2(d);
    const long j0 = long(std::floor(jr));
    const double d0 = std::exp2(double(j0) / double(kNodesPerOctave));
    const double d1 = std::exp2(double(j0 + 1) / double(kNodesPerOctave));
    const double r0 = node(j0, above);
    const double r1 = node(j0 + 1, above);
    const double w = std::clamp((d - d0) / (d1 - d0), 0.0, 1.0);
    return r0 + w * (r1 - r0);
}

DegeneracyFit sqrt_degeneracy_check(const BetaProfile& beta) {
    if (beta.is_constant())
        throw ConfigError("degeneracy check needs a non-constant adhesion profile");
    DegeneracyFit fit;
    fit.smooth = beta.twice_differentiable();

    const double q0 = beta.max();
    const int n = 14;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    double bound = 0.0;
    for (int j = 0; j < n; ++j) {
        const double eta = 1e-6 * std::exp2(double(j));
        const double r = effective_velocity(q0 + eta, beta);
        const double lx = std::log(eta);
        const double ly = std::log(r);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        bound = std::max(bound, r * -std::log(eta));
    }
    fit.exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.log_law_bound = bound;
    return fit;
}

std::vector<SweepPoint> epsilon_sweep(DropState initial, double T,
                                      const BetaProfile& beta,
                                      const std::vector<double>& eps_list,
                                      double h, const SlopeTables& tables) {
    if (eps_list.empty())
        throw ConfigError("run.eps list must be nonempty");
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
        if (!(std::isfinite(eps_list[i]) && eps_list[i] > 0.0))
            throw ConfigError("run.eps entries must be finite and > 0");
        if (i > 0 && !(eps_list[i] < eps_list[i - 1]))
            throw ConfigError("run.eps list must be strictly decreasing");
    }

    // Same endpoint speed bound the stepper enforces; the finest
    // oscillation must be sampled well below it.
    const CriticalLength lc = tables.ell_c();
    const double ell0 = lc.finite ? std::min(initial.ell(), lc.value) : initial.ell();
    const double m = std::max(2.0 * std::sqrt(beta.max()),
                              std::abs(tables.slope_b(ell0)));
    const double speed_cap = 0.5 * m * m + beta.max();
    const double eps_min = eps_list.back();
    if (!(h <= eps_min * beta.period() / (10.0 * speed_cap)))
        throw ConfigError("run.h too coarse for the finest epsilon: "
                          "need h <= eps * period / (10 * speed bound)");

    SimOptions opt;
    opt.stride = 1;
    opt.diagnostics = false;

    const EffectiveLaw law = EffectiveLaw::from_beta(beta);
    SimOptions hom_opt = opt;
    hom_opt.effective = &law;
    const Trajectory hom =
        simulate(initial, T, h, beta, tables, VelocityLaw::Homogenized, hom_opt);

    std::vector<std::future<Trajectory>> runs;
    runs.reserve(eps_list.size());
    for (double eps : eps_list) {
        runs.push_back(std::async(std::launch::async, [&, eps] {
            const BetaProfile fast = beta.rescaled(eps);
            return simulate(initial, T, h, fast, tables, VelocityLaw::Raw, opt);
        }));
    }

    std::vector<SweepPoint> out;
    out.reserve(eps_list.size());
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
        const Trajectory raw = runs[i].get();
        SweepPoint pt{eps_list[i], 0.0, 0.0};
        for (std::size_t k = 0; k < raw.samples.size(); ++k) {
            pt.sup_err_a = std::max(pt.sup_err_a,
                                    std::abs(raw.samples[k].a - hom.samples[k].a));
            pt.sup_err_b = std::max(pt.sup_err_b,
                                    std::abs(raw.samples[k].b - hom.samples[k].b));
        }
        out.push_back(pt);
    }
    return out;
}

} // namespace drops
