#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace ncgqw {

/// SI physical constants. Defaults are the neutron values used throughout the
/// bound arithmetic; note hbar here is the rounded 1.059e-34 J*s those numbers
/// were derived with, not the CODATA value (a config file can override it).
struct Constants {
    double hbar = 1.059e-34;     // J*s
    double mass = 1.675e-27;     // kg
    double g_accel = 9.81;       // m/s^2
};

/// GRANIT-type neutron measurement: the resolution bound on the first level
/// and the mean horizontal beam speed.
struct Experiment {
    double delta_e1_exp = 6.55e-32;  // J
    double v_mean = 6.5;             // m/s
};

/// Config-file error carrying the offending line and key.
struct ConfigError : std::runtime_error {
    int line;
    std::string key;

    ConfigError(int line_, std::string key_, const std::string& what_)
        : std::runtime_error(what_), line(line_), key(std::move(key_)) {}
};

namespace detail {

inline void require_positive(double v, const char* field) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw ConfigError(0, field,
                          std::string("field '") + field + "' must be positive and finite");
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace detail

inline void validate(const Constants& c) {
    detail::require_positive(c.hbar, "hbar");
    detail::require_positive(c.mass, "mass");
    detail::require_positive(c.g_accel, "g_accel");
}

/// Load-time validation requires v_mean > 0 so the derived wavenumber is
/// positive; a zero-speed Experiment can still be built directly for limits.
inline void validate(const Experiment& e) {
    detail::require_positive(e.delta_e1_exp, "delta_e1_exp");
    detail::require_positive(e.v_mean, "v_mean");
}

/// Parses the `key = value` config format: UTF-8 text, one pair per line,
/// '#' starts a comment. Unknown keys, malformed lines and non-positive
/// values raise ConfigError naming the line and key.
inline std::pair<Constants, Experiment> parse_config(std::istream& in) {
    Constants c;
    Experiment e;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(line_no, "", "line " + std::to_string(line_no) +
                                                ": expected 'key = value'");
        std::string key(detail::trim(line.substr(0, eq)));
        std::string_view value = detail::trim(line.substr(eq + 1));
        double parsed = 0.0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
        if (ec != std::errc{} || ptr != value.data() + value.size())
            throw ConfigError(line_no, key, "line " + std::to_string(line_no) + ": key '" +
                                                key + "' has unparseable value '" +
                                                std::string(value) + "'");
        if (key == "hbar") {
            c.hbar = parsed;
        } else if (key == "mass") {
            c.mass = parsed;
        } else if (key == "g_accel") {
            c.g_accel = parsed;
        } else if (key == "delta_e1_exp") {
            e.delta_e1_exp = parsed;
        } else if (key == "v_mean") {
            e.v_mean = parsed;
        } else {
            throw ConfigError(line_no, key, "line " + std::to_string(line_no) +
                                                ": unknown key '" + key + "'");
        }
    }
    validate(c);
    validate(e);
    return {c, e};
}

inline std::pair<Constants, Experiment> load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError(0, "", "cannot open config file '" + path.string() + "'");
    return parse_config(in);
}

/// Writes a config that reloads to bit-identical values (%.17g round-trips
/// every double).
inline std::string serialize_config(const Constants& c, const Experiment& e) {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "# ncgqw constants\n"
                  "hbar = %.17g\n"
                  "mass = %.17g\n"
                  "g_accel = %.17g\n"
                  "delta_e1_exp = %.17g\n"
                  "v_mean = %.17g\n",
                  c.hbar, c.mass, c.g_accel, e.delta_e1_exp, e.v_mean);
    return buf;
}

/// Plane-wave wavenumber of the transverse beam motion: k = m v / hbar.
inline double wavenumber(const Constants& c, const Experiment& e) {
    return c.mass * e.v_mean / c.hbar;
}

}  // namespace ncgqw
