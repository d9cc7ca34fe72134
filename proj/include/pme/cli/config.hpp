#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pme/core.hpp"
#include "pme/sampling.hpp"

namespace pme::cli {

/// Bad configuration or flags; the message names the line and/or field.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parsed form of a density spec string. Accepted forms (separators may be
/// spaces, commas or colons):
///   uniform a b
///   barenblatt m t0 mass
///   gaussian-truncated a b sigma
///   barrier N m beta alpha
struct DensityChoice {
    std::string kind;
    std::vector<double> args;
    std::string text;
};

DensityChoice parse_density(const std::string& text);

struct ExperimentConfig {
    std::string command;
    std::optional<DensityChoice> density;
    std::vector<std::size_t> N{100};
    double m = 2.0;
    double T = 1.0;
    std::vector<double> times;       ///< explicit output times; empty = `outputs` uniform times
    std::size_t outputs = 50;
    double rtol = 1e-8;
    double atol = 1e-10;
    std::string out = ".";
    bool plot = false;
    std::uint64_t seed = 1;
    std::string phi = "bump";
    double corrupt = 1.0;            ///< verify: scale stored positions at t > 0 (negative control)

    /// Output times actually requested from the integrator.
    std::vector<double> output_times() const;
};

/// Flat `key = value` lines, `#` starts a comment. Unknown keys and bad
/// values raise ConfigError with "<origin>:<line>: field '<key>': ...".
std::map<std::string, std::pair<std::string, std::string>> read_config_file(const std::string& path);

/// Applies one key/value to `cfg`. `where` prefixes error messages.
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value,
                   const std::string& where);

/// Keys understood by apply_setting.
const std::vector<std::string>& known_keys();

/// Defaults, then the config file (if `config_path` is non-empty), then
/// `flags` (key -> raw value). Later sources win.
ExperimentConfig resolve_config(const std::string& command, const std::string& config_path,
                                const std::map<std::string, std::string>& flags);

/// Checks cross-field constraints (N >= 1, T > 0, times inside (0, T], ...).
void validate(const ExperimentConfig& cfg);

/// Builds the initial particle state for `N` particles from the density choice.
ParticleState initial_state(const ExperimentConfig& cfg, std::size_t N);

/// DensitySpec for choices backed by a density (not `barrier`).
DensitySpec density_spec(const DensityChoice& choice);

}  // namespace pme::cli
