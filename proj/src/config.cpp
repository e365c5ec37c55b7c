#include "drops/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "drops/csv.hpp"
#include "drops/tables.hpp"

namespace drops {
namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size())
        throw ConfigError(key + " must be a number, got '" + text + "'");
    return v;
}

long parse_long(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    char* end = nullptr;
    const long v = std::strtol(t.c_str(), &end, 10);
    if (t.empty() || end != t.c_str() + t.size())
        throw ConfigError(key + " must be an integer, got '" + text + "'");
    return v;
}

unsigned long long parse_ull(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    char* end = nullptr;
    const unsigned long long v = std::strtoull(t.c_str(), &end, 10);
    if (t.empty() || end != t.c_str() + t.size())
        throw ConfigError(key + " must be a non-negative integer, got '" + text + "'");
    return v;
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty())
            out.push_back(parse_double(key, item));
    }
    if (out.empty())
        throw ConfigError(key + " must be a comma-separated list of numbers");
    return out;
}

class KeyMap {
  public:
    void set(const std::string& key, const std::string& value) { kv_[key] = value; }

    bool take(const std::string& key, std::string& value) {
        auto it = kv_.find(key);
        if (it == kv_.end())
            return false;
        value = it->second;
        kv_.erase(it);
        return true;
    }

    void reject_leftovers() const {
        if (!kv_.empty())
            throw ConfigError("unknown config key: " + kv_.begin()->first);
    }

  private:
    std::map<std::string, std::string> kv_;
};

void load_file(const std::string& path, KeyMap& map) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
        map.set(key, value);
    }
}

std::string join(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += format_double(v[i]);
    }
    return s;
}

} // namespace

PhysicalParams RunConfig::make_params() const {
    return PhysicalParams(v0, kappa, alpha);
}

BetaProfile RunConfig::make_beta() const {
    if (beta_kind == "constant")
        return BetaProfile::constant(beta_value);
    if (beta_kind == "sine")
        return BetaProfile::sine(beta_mean, beta_amplitude, beta_period);
    if (beta_kind == "pwl")
        return BetaProfile::piecewise_linear(beta_xs, beta_values, beta_period);
    throw ConfigError("beta.kind must be constant, sine, or pwl, got '" + beta_kind + "'");
}

std::vector<std::string> RunConfig::resolved_lines() const {
    std::vector<std::string> lines;
    auto num = [&](const char* key, double v) {
        lines.push_back(std::string(key) + " = " + format_double(v));
    };
    auto str = [&](const char* key, const std::string& v) {
        lines.push_back(std::string(key) + " = " + v);
    };
    num("params.V0", v0);
    num("params.kappa", kappa);
    num("params.alpha", alpha);
    str("beta.kind", beta_kind);
    if (beta_kind == "constant") {
        num("beta.value", beta_value);
    } else if (beta_kind == "sine") {
        num("beta.mean", beta_mean);
        num("beta.amplitude", beta_amplitude);
        num("beta.period", beta_period);
    } else {
        str("beta.xs", join(beta_xs));
        str("beta.values", join(beta_values));
        num("beta.period", beta_period);
    }
    num("run.T", T);
    num("run.h", h);
    num("run.a0", a0);
    num("run.b0", b0);
    lines.push_back("run.stride = " + std::to_string(stride));
    str("run.law", law);
    str("run.eps", join(eps));
    num("run.q_min", q_min);
    num("run.q_max", q_max);
    lines.push_back("run.q_count = " + std::to_string(q_count));
    num("run.s_min", s_min);
    num("run.s_max", s_max);
    lines.push_back("run.s_count = " + std::to_string(s_count));
    num("run.ell_min", ell_min);
    num("run.ell_max", ell_max);
    lines.push_back("run.ell_count = " + std::to_string(ell_count));
    num("run.ell_floor_rel", ell_floor_rel);
    lines.push_back("run.seed = " + std::to_string(seed));
    str("run.out", out.empty() ? "(default)" : out);
    return lines;
}

RunConfig parse_config(const std::vector<std::string>& args) {
    std::string file;
    std::vector<std::pair<std::string, std::string>> flags;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& arg = args[i];
        if (arg.rfind("--", 0) == 0) {
            if (i + 1 >= args.size())
                throw ConfigError("flag " + arg + " needs a value");
            flags.emplace_back(arg.substr(2), args[++i]);
        } else if (file.empty()) {
            file = arg;
        } else {
            throw ConfigError("unexpected positional argument: " + arg);
        }
    }
    KeyMap map;
    if (!file.empty())
        load_file(file, map);
    for (const auto& [key, value] : flags)
        map.set(key, value); // flags override the file

    RunConfig cfg;
    std::string v;
    if (map.take("params.V0", v))
        cfg.v0 = parse_double("params.V0", v);
    if (map.take("params.kappa", v))
        cfg.kappa = parse_double("params.kappa", v);
    if (map.take("params.alpha", v))
        cfg.alpha = parse_double("params.alpha", v);
    if (map.take("beta.kind", v))
        cfg.beta_kind = trim(v);
    if (map.take("beta.value", v))
        cfg.beta_value = parse_double("beta.value", v);
    if (map.take("beta.mean", v))
        cfg.beta_mean = parse_double("beta.mean", v);
    if (map.take("beta.amplitude", v))
        cfg.beta_amplitude = parse_double("beta.amplitude", v);
    if (map.take("beta.period", v))
        cfg.beta_period = parse_double("beta.period", v);
    if (map.take("beta.xs", v))
        cfg.beta_xs = parse_list("beta.xs", v);
    if (map.take("beta.values", v))
        cfg.beta_values = parse_list("beta.values", v);
    if (map.take("run.T", v))
        cfg.T = parse_double("run.T", v);
    if (map.take("run.h", v))
        cfg.h = parse_double("run.h", v);
    if (map.take("run.a0", v))
        cfg.a0 = parse_double("run.a0", v);
    if (map.take("run.b0", v))
        cfg.b0 = parse_double("run.b0", v);
    if (map.take("run.stride", v))
        cfg.stride = parse_long("run.stride", v);
    if (map.take("run.law", v))
        cfg.law = trim(v);
    if (map.take("run.eps", v))
        cfg.eps = parse_list("run.eps", v);
    if (map.take("run.q_min", v))
        cfg.q_min = parse_double("run.q_min", v);
    if (map.take("run.q_max", v))
        cfg.q_max = parse_double("run.q_max", v);
    if (map.take("run.q_count", v))
        cfg.q_count = parse_long("run.q_count", v);
    if (map.take("run.s_min", v))
        cfg.s_min = parse_double("run.s_min", v);
    if (map.take("run.s_max", v))
        cfg.s_max = parse_double("run.s_max", v);
    if (map.take("run.s_count", v))
        cfg.s_count = parse_long("run.s_count", v);
    if (map.take("run.ell_min", v))
        cfg.ell_min = parse_double("run.ell_min", v);
    if (map.take("run.ell_max", v))
        cfg.ell_max = parse_double("run.ell_max", v);
    if (map.take("run.ell_count", v))
        cfg.ell_count = parse_long("run.ell_count", v);
    if (map.take("run.ell_floor_rel", v))
        cfg.ell_floor_rel = parse_double("run.ell_floor_rel", v);
    if (map.take("run.seed", v))
        cfg.seed = parse_ull("run.seed", v);
    if (map.take("run.out", v))
        cfg.out = trim(v);
    map.reject_leftovers();

    // Surface invariant violations at parse time, with the key name.
    cfg.make_params();
    cfg.make_beta();
    if (!(std::isfinite(cfg.T) && cfg.T > 0.0))
        throw ConfigError("run.T must be finite and > 0");
    if (!(std::isfinite(cfg.h) && cfg.h >= 0.0))
        throw ConfigError("run.h must be finite and >= 0 (0 selects the automatic step)");
    if (!(std::isfinite(cfg.a0) && std::isfinite(cfg.b0) && cfg.a0 < cfg.b0))
        throw ConfigError("run.a0 and run.b0 must be finite with a0 < b0");
    if (cfg.stride < 1)
        throw ConfigError("run.stride must be >= 1");
    if (cfg.law != "raw" && cfg.law != "homogenized")
        throw ConfigError("run.law must be raw or homogenized, got '" + cfg.law + "'");
    if (cfg.q_count < 2 || cfg.s_count < 2 || cfg.ell_count < 2)
        throw ConfigError("run.q_count, run.s_count, run.ell_count must be >= 2");
    if (!(cfg.ell_floor_rel > 0.0 && cfg.ell_floor_rel < 1.0))
        throw ConfigError("run.ell_floor_rel must lie in (0, 1)");
    return cfg;
}

double auto_step(const RunConfig& cfg) {
    const PhysicalParams p = cfg.make_params();
    const BetaProfile beta = cfg.make_beta();
    const SlopeTables tables(p);
    const CriticalLength lc = tables.ell_c();
    const double scale = lc.finite ? lc.value : cfg.b0 - cfg.a0;
    const double ell0 = lc.finite ? std::min(cfg.b0 - cfg.a0, lc.value) : cfg.b0 - cfg.a0;
    const double m = std::max(2.0 * std::sqrt(beta.max()),
                              std::abs(tables.slope_b(ell0)));
    const double cap = 0.5 * m * m + beta.max();
    return scale * 1e-3 / cap;
}

} // namespace drops
