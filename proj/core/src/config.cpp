#include "qbsim/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qbsim/errors.hpp"

namespace qbsim {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& s) {
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid value for '" + key + "': expected a number, got '" + s + "'");
    }
}

int parse_int(const std::string& key, const std::string& s) {
    try {
        size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size() || v < -1000000000L || v > 1000000000L) throw std::invalid_argument("");
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw ConfigError("invalid value for '" + key + "': expected an integer, got '" + s + "'");
    }
}

std::vector<double> parse_list(const std::string& key, const std::string& s) {
    std::vector<double> out;
    std::string token;
    std::istringstream in(s);
    while (std::getline(in, token, ',')) {
        token = trim(token);
        if (token.empty()) continue;
        out.push_back(parse_double(key, token));
    }
    return out;
}

std::string format_list(const std::vector<double>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += format_double(v[i]);
    }
    return out;
}

std::string objective_token(SweepObjective o) {
    return o == SweepObjective::total_delta_f ? "delta_f" : "delta_f_per_atom";
}

SweepObjective parse_objective(const std::string& s) {
    if (s == "delta_f") return SweepObjective::total_delta_f;
    if (s == "delta_f_per_atom") return SweepObjective::delta_f_per_atom;
    throw ConfigError("invalid value for 'sweep.objective': expected 'delta_f' or "
                      "'delta_f_per_atom', got '" + s + "'");
}

} // namespace

std::string to_string(RunMode mode) {
    switch (mode) {
        case RunMode::simulate: return "simulate";
        case RunMode::sweep: return "sweep";
        case RunMode::oracle: return "oracle";
        case RunMode::hp_compare: return "hp-compare";
        case RunMode::parallel_compare: return "parallel-compare";
    }
    return "?";
}

RunMode parse_run_mode(const std::string& token) {
    if (token == "simulate") return RunMode::simulate;
    if (token == "sweep") return RunMode::sweep;
    if (token == "oracle") return RunMode::oracle;
    if (token == "hp-compare") return RunMode::hp_compare;
    if (token == "parallel-compare") return RunMode::parallel_compare;
    throw ConfigError("invalid value for 'mode': expected one of simulate, sweep, oracle, "
                      "hp-compare, parallel-compare; got '" + token + "'");
}

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {
        "mode", "omega0", "omega", "amplitude", "gamma", "nbar", "n_atoms",
        "t_max", "dt", "record_stride", "ss_tolerance", "positivity_tolerance",
        "output_dir", "sweep.n_min", "sweep.n_max", "sweep.gamma_list",
        "sweep.amplitude_list", "sweep.nbar_list", "sweep.objective",
    };
    return keys;
}

void apply_key_value(RunConfig& c, const std::string& key, const std::string& value,
                     const std::string& source) {
    if (key == "mode") c.mode = parse_run_mode(value);
    else if (key == "omega0") c.params.omega0 = parse_double(key, value);
    else if (key == "omega") c.params.omega = parse_double(key, value);
    else if (key == "amplitude") c.params.amplitude = parse_double(key, value);
    else if (key == "gamma") c.params.gamma = parse_double(key, value);
    else if (key == "nbar") c.params.nbar = parse_double(key, value);
    else if (key == "n_atoms") c.params.n_atoms = parse_int(key, value);
    else if (key == "t_max") c.params.t_max = parse_double(key, value);
    else if (key == "dt") c.params.dt = parse_double(key, value);
    else if (key == "record_stride") c.params.record_stride = parse_int(key, value);
    else if (key == "ss_tolerance") c.params.ss_tolerance = parse_double(key, value);
    else if (key == "positivity_tolerance") c.params.positivity_tolerance = parse_double(key, value);
    else if (key == "output_dir") c.output_dir = value;
    else if (key == "sweep.n_min") c.sweep.n_min = parse_int(key, value);
    else if (key == "sweep.n_max") c.sweep.n_max = parse_int(key, value);
    else if (key == "sweep.gamma_list") c.sweep.gamma_list = parse_list(key, value);
    else if (key == "sweep.amplitude_list") c.sweep.amplitude_list = parse_list(key, value);
    else if (key == "sweep.nbar_list") c.sweep.nbar_list = parse_list(key, value);
    else if (key == "sweep.objective") c.sweep.objective = parse_objective(value);
    else throw ConfigError("unknown key '" + key + "'");
    c.sources[key] = source;
}

namespace {

std::string get_value(const RunConfig& c, const std::string& key) {
    if (key == "mode") return c.mode ? to_string(*c.mode) : "";
    if (key == "omega0") return format_double(c.params.omega0);
    if (key == "omega") return format_double(c.params.omega);
    if (key == "amplitude") return format_double(c.params.amplitude);
    if (key == "gamma") return format_double(c.params.gamma);
    if (key == "nbar") return format_double(c.params.nbar);
    if (key == "n_atoms") return std::to_string(c.params.n_atoms);
    if (key == "t_max") return format_double(c.params.t_max);
    if (key == "dt") return format_double(c.params.dt);
    if (key == "record_stride") return std::to_string(c.params.record_stride);
    if (key == "ss_tolerance") return format_double(c.params.ss_tolerance);
    if (key == "positivity_tolerance") return format_double(c.params.positivity_tolerance);
    if (key == "output_dir") return c.output_dir;
    if (key == "sweep.n_min") return std::to_string(c.sweep.n_min);
    if (key == "sweep.n_max") return std::to_string(c.sweep.n_max);
    if (key == "sweep.gamma_list") return format_list(c.sweep.gamma_list);
    if (key == "sweep.amplitude_list") return format_list(c.sweep.amplitude_list);
    if (key == "sweep.nbar_list") return format_list(c.sweep.nbar_list);
    if (key == "sweep.objective") return objective_token(c.sweep.objective);
    return "";
}

} // namespace

void apply_config_text(RunConfig& config, const std::string& text, const std::string& source) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> unknown;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected 'key = value', got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            apply_key_value(config, key, value, source);
        } catch (const ConfigError& e) {
            if (std::string(e.what()).rfind("unknown key", 0) == 0) {
                unknown.push_back(key);
            } else {
                throw;
            }
        }
    }
    if (!unknown.empty()) {
        std::string msg = "unknown config key(s):";
        for (const std::string& k : unknown) msg += " '" + k + "'";
        throw ConfigError(msg);
    }
}

void apply_config_file(RunConfig& config, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    apply_config_text(config, buf.str(), "file");
}

std::string serialize_config(const RunConfig& config) {
    std::string out;
    for (const std::string& key : config_keys()) {
        if (key == "mode" && !config.mode) continue;
        out += key + " = " + get_value(config, key) + "\n";
    }
    return out;
}

std::vector<std::string> provenance_lines(const RunConfig& config) {
    std::vector<std::string> lines;
    for (const std::string& key : config_keys()) {
        const auto it = config.sources.find(key);
        const std::string source = it == config.sources.end() ? "default" : it->second;
        lines.push_back(key + " = " + get_value(config, key) + "  [" + source + "]");
    }
    return lines;
}

void RunConfig::validate() const {
    if (!mode) throw ConfigError("missing required key 'mode'");
    params.validate();
    if (*mode == RunMode::sweep) {
        if (sweep.n_min < 1) throw ConfigError("invalid parameter 'sweep.n_min': must be >= 1");
        if (sweep.n_max < sweep.n_min)
            throw ConfigError("invalid parameter 'sweep.n_max': must be >= sweep.n_min");
    }
    if (*mode == RunMode::oracle && params.n_atoms != 1) {
        throw ConfigError("invalid parameter 'n_atoms': oracle mode requires n_atoms = 1");
    }
}

SweepSpec RunConfig::sweep_spec() const {
    SweepSpec spec;
    spec.base = params;
    spec.n_min = sweep.n_min;
    spec.n_max = sweep.n_max;
    spec.gamma_values = sweep.gamma_list;
    spec.amplitude_values = sweep.amplitude_list;
    spec.nbar_values = sweep.nbar_list;
    spec.objective = sweep.objective;
    return spec;
}

} // namespace qbsim
