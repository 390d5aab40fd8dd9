#include "bohmrad/config.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace bohmrad {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string format_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void validate_config(const ExperimentConfig& cfg) {
    if (!(cfg.a > 0.0)) throw ConfigError("config invariant violated: a > 0");
    if (!(cfg.b > 0.0)) throw ConfigError("config invariant violated: b > 0");
    if (!(cfg.a > cfg.b))
        throw ConfigError("config invariant violated: a > b (slits separated and non-overlapping)");
    if (!(cfg.T > 0.0)) throw ConfigError("config invariant violated: T > 0");
    if (!(cfg.v_x > 0.0)) throw ConfigError("config invariant violated: v_x > 0");
    if (!(cfg.screen_x > 0.0))
        throw ConfigError("config invariant violated: screen_x > 0");
    if (!(cfg.X > 0.0)) throw ConfigError("config invariant violated: X > 0");
    if (!std::isfinite(cfg.t_at(cfg.screen_x)) || !(cfg.t_at(cfg.screen_x) > 0.0))
        throw ConfigError("config invariant violated: t(x) = x/v_x positive");
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    std::map<std::string, bool> seen;
    bool have_X = false;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config parse error at line " + std::to_string(lineno) +
                              ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));

        double parsed = 0.0;
        try {
            size_t pos = 0;
            parsed = std::stod(val, &pos);
            if (pos != val.size()) throw std::invalid_argument(val);
        } catch (const std::exception&) {
            throw ConfigError("config parse error at line " + std::to_string(lineno) +
                              ": bad numeric value '" + val + "'");
        }

        if (seen[key])
            throw ConfigError("config parse error at line " + std::to_string(lineno) +
                              ": duplicate key '" + key + "'");
        seen[key] = true;

        if (key == "a_cm") cfg.a = parsed;
        else if (key == "b_cm") cfg.b = parsed;
        else if (key == "X_cm") { cfg.X = parsed; have_X = true; }
        else if (key == "T_s") cfg.T = parsed;
        else if (key == "vx_cm_s") cfg.v_x = parsed;
        else if (key == "screen_x_cm") cfg.screen_x = parsed;
        else
            throw ConfigError("config parse error at line " + std::to_string(lineno) +
                              ": unknown key '" + key + "'");
    }

    for (const char* req : {"a_cm", "b_cm", "T_s", "vx_cm_s", "screen_x_cm"}) {
        if (!seen[req])
            throw ConfigError(std::string("config parse error: missing key '") + req + "'");
    }
    if (!have_X) cfg.X = cfg.v_x * cfg.T;

    validate_config(cfg);
    return cfg;
}

std::string serialize_config(const ExperimentConfig& cfg) {
    std::string out;
    out += "a_cm=" + format_g(cfg.a) + "\n";
    out += "b_cm=" + format_g(cfg.b) + "\n";
    out += "X_cm=" + format_g(cfg.X) + "\n";
    out += "T_s=" + format_g(cfg.T) + "\n";
    out += "vx_cm_s=" + format_g(cfg.v_x) + "\n";
    out += "screen_x_cm=" + format_g(cfg.screen_x) + "\n";
    return out;
}

}  // namespace bohmrad
