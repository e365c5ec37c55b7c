#include "drops/cli.hpp"

#include <cmath>
#include <optional>
#include <ostream>

#include "drops/checks.hpp"
#include "drops/config.hpp"
#include "drops/csv.hpp"
#include "drops/dynamics.hpp"
#include "drops/homog.hpp"
#include "drops/tables.hpp"
#include "drops/waves.hpp"

namespace drops {
namespace {

const char* kUsage =
    "usage: drops_cli <subcommand> [config-file] [--key value ...]\n"
    "subcommands:\n"
    "  simulate    trajectory CSV (t,a,b,ell,lambda,slope_a,slope_b,energy)\n"
    "  tables      contact-slope energies vs support length (ell,G,H,F,H_minus_G)\n"
    "  tw          constant-adhesion wave speed curve (s,c)\n"
    "  pulsate     pulsating wave profile over one period (x,z)\n"
    "  rq          effective velocity curve (q,r)\n"
    "  homogenize  oscillation-scale sweep report (eps,sup_err_a,sup_err_b)\n"
    "  stick       sticking barrier report\n"
    "  check       run the full property suite (exit 4 on failure)\n"
    "config keys use dotted sections (params.V0, beta.kind, run.T); flags\n"
    "mirror them (--params.V0 1.0) and override the file.\n";

std::string out_path(const RunConfig& cfg, const std::string& subcommand) {
    return cfg.out.empty() ? subcommand + ".csv" : cfg.out;
}

/// Full resolved config as # comments, so every CSV is reproducible
/// from its own header.
void provenance(CsvWriter& csv, const std::string& subcommand, const RunConfig& cfg) {
    csv.comment("drops_cli " + subcommand);
    for (const std::string& line : cfg.resolved_lines())
        csv.comment(line);
}

void log_derived(std::ostream& err, const PhysicalParams& p, const BetaProfile& beta,
                 const CriticalLength& lc) {
    err << "derived: tilt = " << format_double(p.tilt) << ", k2 = " << format_double(p.k2)
        << ", beta range = [" << format_double(beta.min()) << ", "
        << format_double(beta.max()) << "], ell_c = "
        << (lc.finite ? format_double(lc.value) : std::string("inf")) << "\n";
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const PhysicalParams p = cfg.make_params();
    const BetaProfile beta = cfg.make_beta();
    const SlopeTables tables(p);
    log_derived(err, p, beta, tables.ell_c());

    double h = cfg.h;
    if (h == 0.0) {
        h = auto_step(cfg);
        err << "auto step: run.h = " << format_double(h) << "\n";
    }

    SimOptions opt;
    opt.stride = int(cfg.stride);
    opt.ell_floor_rel = cfg.ell_floor_rel;
    std::optional<EffectiveLaw> law;
    VelocityLaw which = VelocityLaw::Raw;
    if (cfg.law == "homogenized") {
        law = EffectiveLaw::from_beta(beta);
        opt.effective = &*law;
        which = VelocityLaw::Homogenized;
    }

    DropState init{0.0, cfg.a0, cfg.b0};
    const Trajectory tr = simulate(init, cfg.T, h, beta, tables, which, opt);

    CsvWriter csv;
    provenance(csv, "simulate", cfg);
    csv.comment("beta = " + beta.describe());
    csv.comment("resolved h = " + format_double(h));
    csv.header({"t", "a", "b", "ell", "lambda", "slope_a", "slope_b", "energy"});
    for (const TrajectorySample& s : tr.samples)
        csv.row({s.t, s.a, s.b, s.ell, s.lambda, s.slope_a, s.slope_b, s.energy});
    const std::string path = out_path(cfg, "simulate");
    csv.write_file(path);
    out << "wrote " << path << " (" << tr.samples.size() << " samples)\n";
    return 0;
}

int cmd_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const PhysicalParams p = cfg.make_params();
    const BetaProfile beta = cfg.make_beta();
    const SlopeTables tables(p);
    const CriticalLength lc = tables.ell_c();
    log_derived(err, p, beta, lc);

    const double ref = lc.finite ? lc.value : 4.0 * std::cbrt(p.V0);
    const double lo = cfg.ell_min > 0.0 ? cfg.ell_min : ref / 100.0;
    const double hi = cfg.ell_max > 0.0 ? cfg.ell_max : ref;
    if (!(lo < hi))
        throw ConfigError("run.ell_min must be below run.ell_max");

    CsvWriter csv;
    provenance(csv, "tables", cfg);
    csv.header({"ell", "G", "H", "F", "H_minus_G"});
    for (long i = 0; i < cfg.ell_count; ++i) {
        const double ell = lo + (hi - lo) * double(i) / double(cfg.ell_count - 1);
        const auto [g, hh] = tables.GH(ell);
        csv.row({ell, g, hh, g + hh, hh - g});
    }
    csv.raw_row("# ell_c = " + (lc.finite ? format_double(lc.value) : std::string("inf")));
    const std::string path = out_path(cfg, "tables");
    csv.write_file(path);
    out << "wrote " << path << " (" << cfg.ell_count << " rows)\n";
    return 0;
}

int cmd_tw(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const BetaProfile beta = cfg.make_beta();
    if (!beta.is_constant())
        throw ConfigError("tw needs beta.kind = constant (heterogeneous media pulsate instead)");
    const double beta0 = beta.min();
    err << "kink expected at s = " << format_double(2.0 * beta0) << "\n";

    CsvWriter csv;
    provenance(csv, "tw", cfg);
    csv.comment("speed curve c(s) for constant adhesion " + format_double(beta0) +
                "; kink at s = " + format_double(2.0 * beta0));
    csv.header({"s", "c"});
    for (long i = 0; i < cfg.s_count; ++i) {
        const double s =
            cfg.s_min + (cfg.s_max - cfg.s_min) * double(i) / double(cfg.s_count - 1);
        csv.row({s, tw_speed_constant(s, beta0)});
    }
    const std::string path = out_path(cfg, "tw");
    csv.write_file(path);
    out << "wrote " << path << " (" << cfg.s_count << " rows)\n";
    return 0;
}

int cmd_pulsate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const PhysicalParams p = cfg.make_params();
    const BetaProfile beta = cfg.make_beta();
    const SlopeTables tables(p);
    log_derived(err, p, beta, tables.ell_c());

    const PulsatingWave wave = pulsating_wave(beta, tables);

    CsvWriter csv;
    provenance(csv, "pulsate", cfg);
    csv.comment("beta = " + beta.describe());
    csv.comment("time_period = " + format_double(wave.time_period));
    csv.comment("mean_speed = " + format_double(wave.mean_speed));
    csv.comment("periods_to_converge = " + std::to_string(wave.sup_diffs.size() + 1));
    csv.header({"x", "z"});
    for (std::size_t i = 0; i < wave.x.size(); ++i)
        csv.row({wave.x[i], wave.z[i]});
    const std::string path = out_path(cfg, "pulsate");
    csv.write_file(path);
    out << "wrote " << path << " (mean speed " << format_double(wave.mean_speed) << ")\n";
    return 0;
}

int cmd_rq(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const BetaProfile beta = cfg.make_beta();
    err << "plateau: [" << format_double(beta.min()) << ", " << format_double(beta.max())
        << "]\n";

    CsvWriter csv;
    provenance(csv, "rq", cfg);
    csv.comment("beta = " + beta.describe());
    csv.comment("plateau = [" + format_double(beta.min()) + ", " + format_double(beta.max()) +
                "]");
    csv.header({"q", "r"});
    for (long i = 0; i < cfg.q_count; ++i) {
        const double q =
            cfg.q_min + (cfg.q_max - cfg.q_min) * double(i) / double(cfg.q_count - 1);
        csv.row({q, effective_velocity(q, beta)});
    }
    const std::string path = out_path(cfg, "rq");
    csv.write_file(path);
    out << "wrote " << path << " (" << cfg.q_count << " rows)\n";
    return 0;
}

int cmd_homogenize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const PhysicalParams p = cfg.make_params();
    const BetaProfile beta = cfg.make_beta();
    const SlopeTables tables(p);
    const CriticalLength lc = tables.ell_c();
    log_derived(err, p, beta, lc);

    double h = cfg.h;
    if (h == 0.0) {
        // The sweep refuses h above eps_min * period / (10 * speed bound);
        // sit 10% below that ceiling.
        const double ell0 = lc.finite ? std::min(cfg.b0 - cfg.a0, lc.value) : cfg.b0 - cfg.a0;
        const double m = std::max(2.0 * std::sqrt(beta.max()),
                                  std::abs(tables.slope_b(ell0)));
        const double cap = 0.5 * m * m + beta.max();
        double eps_min = cfg.eps.back();
        for (double e : cfg.eps)
            eps_min = std::min(eps_min, e);
        h = 0.09 * eps_min * beta.period() / cap;
        err << "auto step: run.h = " << format_double(h) << "\n";
    }

    DropState init{0.0, cfg.a0, cfg.b0};
    const auto pts = epsilon_sweep(init, cfg.T, beta, cfg.eps, h, tables);

    CsvWriter csv;
    provenance(csv, "homogenize", cfg);
    csv.comment("beta = " + beta.describe());
    csv.comment("resolved h = " + format_double(h));
    csv.header({"eps", "sup_err_a", "sup_err_b"});
    for (const SweepPoint& pt : pts)
        csv.row({pt.eps, pt.sup_err_a, pt.sup_err_b});
    const std::string path = out_path(cfg, "homogenize");
    csv.write_file(path);
    out << "wrote " << path << " (" << pts.size() << " rows)\n";
    return 0;
}

int cmd_stick(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const PhysicalParams p = cfg.make_params();
    const BetaProfile beta = cfg.make_beta();
    const SlopeTables tables(p);
    log_derived(err, p, beta, tables.ell_c());

    const auto bar = sticking_barrier(beta, tables);

    CsvWriter csv;
    provenance(csv, "stick", cfg);
    csv.comment("beta = " + beta.describe());
    csv.comment(bar ? "barrier: found" : "barrier: none (not a failure; the "
                                         "construction is sufficient, not necessary)");
    csv.header({"a_star", "b_star", "ell0", "margin_front", "margin_rear"});
    if (bar)
        csv.row({bar->a_star, bar->b_star, bar->ell0, bar->margin_front, bar->margin_rear});
    const std::string path = out_path(cfg, "stick");
    csv.write_file(path);
    out << (bar ? "barrier found, wrote " : "no barrier, wrote ") << path << "\n";
    return 0;
}

int cmd_check(std::ostream& out) {
    const auto results = run_all_checks(out);
    int passed = 0;
    for (const auto& r : results)
        passed += r.pass ? 1 : 0;
    out << passed << "/" << results.size() << " checks passed\n";
    return passed == int(results.size()) ? 0 : 4;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.empty()) {
            err << kUsage;
            return 2;
        }
        const std::string& sub = args[0];
        if (sub == "help" || sub == "--help" || sub == "-h") {
            out << kUsage;
            return 0;
        }
        const std::vector<std::string> rest(args.begin() + 1, args.end());
        if (sub == "check") {
            if (!rest.empty())
                throw ConfigError("check takes no options");
            return cmd_check(out);
        }
        const RunConfig cfg = parse_config(rest);
        if (sub == "simulate")
            return cmd_simulate(cfg, out, err);
        if (sub == "tables")
            return cmd_tables(cfg, out, err);
        if (sub == "tw")
            return cmd_tw(cfg, out, err);
        if (sub == "pulsate")
            return cmd_pulsate(cfg, out, err);
        if (sub == "rq")
            return cmd_rq(cfg, out, err);
        if (sub == "homogenize")
            return cmd_homogenize(cfg, out, err);
        if (sub == "stick")
            return cmd_stick(cfg, out, err);
        err << "unknown subcommand: " << sub << "\n" << kUsage;
        return 2;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace drops
