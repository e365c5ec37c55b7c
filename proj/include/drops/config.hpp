#pragma once

#include <string>
#include <vector>

#include "drops/beta.hpp"
#include "drops/params.hpp"

namespace drops {

/// Flat key-value configuration shared by all subcommands. Defaults
/// are usable as-is for the constant-adhesion demo runs; `h = 0` means
/// "derive a stable step from the critical length and the endpoint
/// speed bound".
struct RunConfig {
    // params block
    double v0 = 1.0;
    double kappa = 1.0;
    double alpha = 0.52359877559829882; // pi/6

    // beta block
    std::string beta_kind = "constant"; // constant | sine | pwl
    double beta_value = 1.0;
    double beta_mean = 1.0;
    double beta_amplitude = 0.1;
    double beta_period = 1.0;
    std::vector<double> beta_xs;
    std::vector<double> beta_values;

    // run block
    double T = 10.0;
    double h = 0.0; // 0 = auto
    double a0 = -1.0;
    double b0 = 0.0;
    long stride = 10;
    std::string law = "raw"; // raw | homogenized
    std::vector<double> eps = {0.1, 0.05, 0.025};
    double q_min = 0.0, q_max = 5.0;
    long q_count = 501;
    double s_min = 0.1, s_max = 4.0;
    long s_count = 40;
    double ell_min = 0.0, ell_max = 0.0; // 0 = auto from the critical length
    long ell_count = 200;
    double ell_floor_rel = 1e-3;
    unsigned long long seed = 12345;
    std::string out; // empty = "<subcommand>.csv"

    PhysicalParams make_params() const;
    BetaProfile make_beta() const;

    /// Every resolved key as "key = value", for provenance headers.
    std::vector<std::string> resolved_lines() const;
};

/// Parse an optional config file plus `--key value` overrides. `args`
/// holds everything after the subcommand: at most one bare path (the
/// file), any number of flag pairs. Unknown keys are rejected by name.
RunConfig parse_config(const std::vector<std::string>& args);

/// Step size used when run.h = 0: a small fraction of the critical
/// length (or of the initial support when there is no critical length)
/// divided by the a-priori endpoint speed bound.
double auto_step(const RunConfig& cfg);

} // namespace drops
