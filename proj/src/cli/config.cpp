#include "pme/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pme/dynamics.hpp"

namespace pme::cli {
namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, const std::string& seps) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (seps.find(c) != std::string::npos) {
            if (!cur.empty()) parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
}

double to_double(const std::string& s, const std::string& what) {
    double v = 0.0;
    const auto t = trim(s);
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size() || t.empty() || !std::isfinite(v)) {
        throw ConfigError(what + ": expected a finite number, got '" + s + "'");
    }
    return v;
}

std::uint64_t to_unsigned(const std::string& s, const std::string& what) {
    std::uint64_t v = 0;
    const auto t = trim(s);
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size() || t.empty()) {
        throw ConfigError(what + ": expected a non-negative integer, got '" + s + "'");
    }
    return v;
}

bool to_bool(const std::string& s, const std::string& what) {
    const auto t = trim(s);
    if (t == "1" || t == "true" || t == "yes" || t == "on") return true;
    if (t == "0" || t == "false" || t == "no" || t == "off") return false;
    throw ConfigError(what + ": expected a boolean, got '" + s + "'");
}

}  // namespace

DensityChoice parse_density(const std::string& text) {
    const auto parts = split(text, " \t,:");
    if (parts.empty()) throw ConfigError("density: empty spec");
    DensityChoice c;
    c.kind = parts[0];
    c.text = text;
    std::size_t want = 0;
    if (c.kind == "uniform") want = 2;
    else if (c.kind == "barenblatt") want = 3;
    else if (c.kind == "gaussian-truncated") want = 3;
    else if (c.kind == "barrier") want = 4;
    else throw ConfigError("density: unknown kind '" + c.kind + "'");
    if (parts.size() - 1 != want) {
        throw ConfigError("density: '" + c.kind + "' takes " + std::to_string(want) + " arguments, got " +
                          std::to_string(parts.size() - 1));
    }
    for (std::size_t i = 1; i < parts.size(); ++i) {
        c.args.push_back(to_double(parts[i], "density argument " + std::to_string(i)));
    }
    return c;
}

std::vector<double> ExperimentConfig::output_times() const {
    if (!times.empty()) return times;
    return uniform_times(T, outputs);
}

const std::vector<std::string>& known_keys() {
    static const std::vector<std::string> keys{"density", "N",    "m",    "T",   "times",
                                               "outputs", "rtol", "atol", "out", "plot",
                                               "seed",    "phi",  "corrupt"};
    return keys;
}

void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& raw,
                   const std::string& where) {
    const std::string value = trim(raw);
    const std::string field = where + "field '" + key + "'";
    try {
        if (key == "density") {
            cfg.density = parse_density(value);
        } else if (key == "N") {
            cfg.N.clear();
            for (const auto& p : split(value, " ,")) {
                const auto n = to_unsigned(p, "value");
                if (n < 1) throw ConfigError("entries must be >= 1");
                cfg.N.push_back(static_cast<std::size_t>(n));
            }
            if (cfg.N.empty()) throw ConfigError("empty list");
        } else if (key == "m") {
            cfg.m = to_double(value, "value");
        } else if (key == "T") {
            cfg.T = to_double(value, "value");
        } else if (key == "times") {
            cfg.times.clear();
            for (const auto& p : split(value, " ,")) cfg.times.push_back(to_double(p, "value"));
            if (cfg.times.empty()) throw ConfigError("empty time grid");
        } else if (key == "outputs") {
            cfg.outputs = static_cast<std::size_t>(to_unsigned(value, "value"));
        } else if (key == "rtol") {
            cfg.rtol = to_double(value, "value");
        } else if (key == "atol") {
            cfg.atol = to_double(value, "value");
        } else if (key == "out") {
            if (value.empty()) throw ConfigError("empty path");
            cfg.out = value;
        } else if (key == "plot") {
            cfg.plot = to_bool(value, "value");
        } else if (key == "seed") {
            cfg.seed = to_unsigned(value, "value");
        } else if (key == "phi") {
            if (value != "bump" && value != "zero" && value != "constant") {
                throw ConfigError("expected bump, zero or constant");
            }
            cfg.phi = value;
        } else if (key == "corrupt") {
            cfg.corrupt = to_double(value, "value");
        } else {
            throw ConfigError("unknown key");
        }
    } catch (const ConfigError& e) {
        throw ConfigError(field + ": " + e.what());
    }
}

std::map<std::string, std::pair<std::string, std::string>> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open config file");
    std::map<std::string, std::pair<std::string, std::string>> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = path + ":" + std::to_string(lineno) + ": ";
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(where + "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const auto& keys = known_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw ConfigError(where + "field '" + key + "': unknown key");
        }
        // Parse now so that errors carry the line number.
        ExperimentConfig scratch;
        apply_setting(scratch, key, line.substr(eq + 1), where);
        entries[key] = {trim(line.substr(eq + 1)), where};
    }
    return entries;
}

ExperimentConfig resolve_config(const std::string& command, const std::string& config_path,
                                const std::map<std::string, std::string>& flags) {
    ExperimentConfig cfg;
    cfg.command = command;
    std::map<std::string, std::pair<std::string, std::string>> settings;
    if (!config_path.empty()) settings = read_config_file(config_path);
    for (const auto& [key, value] : flags) settings[key] = {value, "--" + key + ": "};
    for (const auto& [key, v] : settings) apply_setting(cfg, key, v.first, v.second);
    return cfg;
}

void validate(const ExperimentConfig& cfg) {
    if (!(cfg.m > 1.0)) throw ConfigError("field 'm': must be > 1");
    if (!(cfg.T > 0.0)) throw ConfigError("field 'T': must be > 0");
    if (!(cfg.rtol > 0.0) || !(cfg.atol > 0.0)) throw ConfigError("field 'rtol'/'atol': must be > 0");
    if (cfg.times.empty() && cfg.outputs == 0) throw ConfigError("field 'outputs': empty time grid");
    for (std::size_t i = 0; i < cfg.times.size(); ++i) {
        if (!(cfg.times[i] > 0.0) || (i > 0 && !(cfg.times[i] > cfg.times[i - 1]))) {
            throw ConfigError("field 'times': must be positive and strictly increasing");
        }
    }
    if (cfg.N.empty()) throw ConfigError("field 'N': empty list");
    if (!(cfg.corrupt > 0.0)) throw ConfigError("field 'corrupt': must be > 0");
}

DensitySpec density_spec(const DensityChoice& c) {
    const auto& a = c.args;
    if (c.kind == "uniform") return uniform_density(a[0], a[1]);
    if (c.kind == "barenblatt") {
        if (!(a[0] > 1.0)) throw ConfigError("density: barenblatt exponent must be > 1");
        return barenblatt_density(a[0], a[1], a[2]);
    }
    if (c.kind == "gaussian-truncated") return truncated_gaussian_density(a[0], a[1], a[2]);
    throw ConfigError("density: '" + c.kind + "' does not describe a density");
}

ParticleState initial_state(const ExperimentConfig& cfg, std::size_t N) {
    if (!cfg.density) throw ConfigError("field 'density': missing density spec");
    const auto& c = *cfg.density;
    try {
        if (c.kind == "barrier") {
            const double n = c.args[0];
            if (n < 4 || n != std::floor(n)) throw ConfigError("density: barrier N must be an integer >= 4");
            BarrierConfig b;
            b.N = static_cast<std::size_t>(n);
            b.m = c.args[1];
            b.beta = c.args[2];
            b.alpha = c.args[3];
            return barrier_configuration(b).state;
        }
        return sample_support_preserving(density_spec(c), N, cfg.m);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("density: ") + e.what());
    }
}

}  // namespace pme::cli
