#ifndef QBSIM_CONFIG_HPP
#define QBSIM_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qbsim/params.hpp"
#include "qbsim/sweep.hpp"

namespace qbsim {

enum class RunMode { simulate, sweep, oracle, hp_compare, parallel_compare };

std::string to_string(RunMode mode);
RunMode parse_run_mode(const std::string& token);

// Resolved run configuration: simulation parameters plus dispatch mode,
// output location and the sweep sub-block. Values resolve in layers,
// built-in defaults < config file < command-line flags; every key remembers
// where its value came from (the provenance log).
struct RunConfig {
    std::optional<RunMode> mode;
    SimulationParams params;
    std::string output_dir = ".";
    struct SweepBlock {
        int n_min = 1;
        int n_max = 1;
        std::vector<double> gamma_list;
        std::vector<double> amplitude_list;
        std::vector<double> nbar_list;
        SweepObjective objective = SweepObjective::total_delta_f;
    } sweep;

    std::map<std::string, std::string> sources; // key -> "default"|"file"|"flag"

    // Full validation of the physical block; mode must be present.
    void validate() const;

    SweepSpec sweep_spec() const;
};

// The exact set of recognized keys, in serialization order.
const std::vector<std::string>& config_keys();

// Applies one key/value pair; throws ConfigError for unknown keys or
// malformed values. `source` feeds the provenance log.
void apply_key_value(RunConfig& config, const std::string& key, const std::string& value,
                     const std::string& source);

// Parses a flat key = value document ('#' starts a comment). Unknown keys are
// fatal and listed; the sweep sub-block uses dotted keys (sweep.n_min, ...).
void apply_config_file(RunConfig& config, const std::string& path);

// Same, from an in-memory document.
void apply_config_text(RunConfig& config, const std::string& text, const std::string& source);

// Serializes the resolved configuration as a parseable config document; the
// sibling metadata emitted next to every output file is exactly this plus a
// version comment, so any output is reproducible from its metadata alone.
std::string serialize_config(const RunConfig& config);

// "key = value  [source]" lines for the provenance log.
std::vector<std::string> provenance_lines(const RunConfig& config);

} // namespace qbsim

#endif
