#pragma once

// Flat `key = value` parameter files.
//
// Keys match the SystemParams field names plus `scheme` and `fraction`.
// Values are in engineering units: powers and noise variances in dBm, the
// carrier in MHz, distances in meters. They are converted to SI on load.

#include "covert/core_params.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace covert {

class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& msg, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct ExperimentConfig {
    SystemParams params = SystemParams::defaults();
    std::optional<Scheme> scheme;    // unset = both
    std::optional<double> fraction;  // unset = auto (optimized per parameter set)
};

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

/// Commented template holding the defaults, one key per line with its unit.
std::string config_template();

/// Names of the SystemParams fields, in file order.
const std::vector<std::string>& param_keys();

/// Field value in file units (dBm, MHz, ...).
double param_in_file_units(const SystemParams& p, const std::string& key);

/// Sets a field from a value given in file units. Throws ConfigError on an
/// unknown key.
void set_param_from_file_units(SystemParams& p, const std::string& key, double value);

}  // namespace covert
