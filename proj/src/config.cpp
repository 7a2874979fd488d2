#include "covert/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace covert {

namespace {

enum class Unit { Dbm, Mhz, Plain };

struct KeySpec {
    const char* name;
    Unit unit;
    double SystemParams::*field;
    const char* doc;
};

const KeySpec kKeys[] = {
    {"Pa", Unit::Dbm, &SystemParams::Pa, "Alice transmit power [dBm]"},
    {"fc", Unit::Mhz, &SystemParams::fc, "carrier frequency [MHz]"},
    {"m", Unit::Plain, &SystemParams::m, "path-loss exponent [-]"},
    {"d_ar", Unit::Plain, &SystemParams::d_ar, "Alice-relay distance [m]"},
    {"d_rb", Unit::Plain, &SystemParams::d_rb, "relay-Bob distance [m]"},
    {"lambda_ar", Unit::Plain, &SystemParams::lambda_ar, "mean of |h_ar|^2 [-]"},
    {"lambda_rb", Unit::Plain, &SystemParams::lambda_rb, "mean of |h_rb|^2 [-]"},
    {"sigma2_ra", Unit::Dbm, &SystemParams::sigma2_ra, "relay antenna noise [dBm]"},
    {"sigma2_rc", Unit::Dbm, &SystemParams::sigma2_rc, "relay conversion noise [dBm]"},
    {"sigma2_ba", Unit::Dbm, &SystemParams::sigma2_ba, "Bob antenna noise [dBm]"},
    {"sigma2_bc", Unit::Dbm, &SystemParams::sigma2_bc, "Bob conversion noise [dBm]"},
    {"sigma2_a", Unit::Dbm, &SystemParams::sigma2_a, "Alice receiver noise [dBm]"},
    {"eta0", Unit::Plain, &SystemParams::eta0, "baseline conversion efficiency, (0,1)"},
    {"eta_u", Unit::Plain, &SystemParams::eta_u, "conversion efficiency cap, [eta0,1)"},
    {"epsilon", Unit::Plain, &SystemParams::epsilon, "covertness: require xi* >= 1 - epsilon"},
    {"T_block", Unit::Plain, &SystemParams::T_block, "block duration [s]"},
};

const KeySpec* find_key(const std::string& key) {
    for (const auto& k : kKeys)
        if (key == k.name) return &k;
    return nullptr;
}

double to_si(Unit u, double v) {
    switch (u) {
        case Unit::Dbm: return dbm_to_watts(v);
        case Unit::Mhz: return v * 1e6;
        case Unit::Plain: return v;
    }
    return v;
}

double from_si(Unit u, double v) {
    switch (u) {
        case Unit::Dbm: return watts_to_dbm(v);
        case Unit::Mhz: return v / 1e6;
        case Unit::Plain: return v;
    }
    return v;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, int line) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v))
        throw ConfigError("invalid number '" + text + "'", line);
    return v;
}

}  // namespace

const std::vector<std::string>& param_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> out;
        for (const auto& k : kKeys) out.emplace_back(k.name);
        return out;
    }();
    return keys;
}

double param_in_file_units(const SystemParams& p, const std::string& key) {
    const KeySpec* spec = find_key(key);
    if (!spec) throw ConfigError("unknown parameter '" + key + "'", 0);
    return from_si(spec->unit, p.*(spec->field));
}

void set_param_from_file_units(SystemParams& p, const std::string& key, double value) {
    const KeySpec* spec = find_key(key);
    if (!spec) throw ConfigError("unknown parameter '" + key + "'", 0);
    p.*(spec->field) = to_si(spec->unit, value);
}

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig cfg;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("expected 'key = value'", line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) throw ConfigError("expected 'key = value'", line_no);

        if (key == "scheme") {
            if (value == "both") {
                cfg.scheme.reset();
            } else if (value == "ts" || value == "ps") {
                cfg.scheme = parse_scheme(value);
            } else {
                throw ConfigError("scheme must be ts, ps or both", line_no);
            }
        } else if (key == "fraction") {
            if (value == "auto") {
                cfg.fraction.reset();
            } else {
                const double f = parse_number(value, line_no);
                if (!(f > 0.0 && f < 1.0)) throw ConfigError("fraction must lie in (0, 1)", line_no);
                cfg.fraction = f;
            }
        } else if (const KeySpec* spec = find_key(key)) {
            const double v = parse_number(value, line_no);
            try {
                cfg.params.*(spec->field) = to_si(spec->unit, v);
            } catch (const DomainError& e) {
                throw ConfigError(e.what(), line_no);
            }
        } else {
            throw ConfigError("unknown key '" + key + "'", line_no);
        }
    }
    try {
        cfg.params.validate();
    } catch (const DomainError& e) {
        throw ConfigError(std::string("invalid parameters: ") + e.what(), 0);
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'", 0);
    return parse_config(in);
}

std::string config_template() {
    const SystemParams d = SystemParams::defaults();
    std::ostringstream out;
    out << "# Covert relay experiment parameters.\n"
        << "# One 'key = value' per line; '#' starts a comment.\n"
        << "# Units: powers and noise variances in dBm, fc in MHz, distances in m.\n"
        << "# scheme = ts | ps | both;  fraction = <float in (0,1)> | auto\n"
        << "#   (auto picks the fraction maximizing the forwarded-signal rate).\n\n";
    out << std::setprecision(12);
    for (const auto& k : kKeys) {
        std::ostringstream line;
        line << std::setprecision(12) << k.name << " = " << from_si(k.unit, d.*(k.field));
        out << std::left << std::setw(24) << line.str() << "# " << k.doc << "\n";
    }
    out << std::left << std::setw(24) << "scheme = both" << "# ts | ps | both\n";
    out << std::left << std::setw(24) << "fraction = auto" << "# phi (TS) / rho (PS), or auto\n";
    return out.str();
}

}  // namespace covert
