#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qbsim/config.hpp"
#include "qbsim/errors.hpp"
#include "qbsim/lindblad.hpp"
#include "qbsim/oracle_report.hpp"
#include "qbsim/output.hpp"
#include "qbsim/sweep.hpp"
#include "qbsim/version.hpp"

namespace {

using namespace qbsim;

// config key <-> long flag spelling
const std::vector<std::pair<std::string, std::string>>& flag_table() {
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"mode", "--mode"},
        {"omega0", "--omega0"},
        {"omega", "--omega"},
        {"amplitude", "--amplitude"},
        {"gamma", "--gamma"},
        {"nbar", "--nbar"},
        {"n_atoms", "--n-atoms"},
        {"t_max", "--t-max"},
        {"dt", "--dt"},
        {"record_stride", "--record-stride"},
        {"ss_tolerance", "--ss-tolerance"},
        {"positivity_tolerance", "--positivity-tolerance"},
        {"output_dir", "--output-dir"},
        {"sweep.n_min", "--sweep-n-min"},
        {"sweep.n_max", "--sweep-n-max"},
        {"sweep.gamma_list", "--sweep-gamma-list"},
        {"sweep.amplitude_list", "--sweep-amplitude-list"},
        {"sweep.nbar_list", "--sweep-nbar-list"},
        {"sweep.objective", "--sweep-objective"},
    };
    return table;
}

std::string output_path(const RunConfig& cfg, const std::string& name) {
    return (std::filesystem::path(cfg.output_dir) / name).string();
}

int run_simulate(const RunConfig& cfg) {
    const SimulationParams& p = cfg.params;
    const CollectiveOperators ops = build_collective(p.n_atoms);
    const ComplexMatrix rho0 = gibbs_state(ops, p.omega0, p.bath_temperature());
    const Trajectory traj = integrate(p, ops, rho0);
    write_trajectory(traj, cfg, output_path(cfg, "trajectory.csv"));

    if (p.t_max >= 3.0 * p.drive_period()) {
        const SteadyStateResult ss = detect_steady_state(traj, p);
        std::cout << "steady: converged=" << (ss.converged ? "true" : "false")
                  << " t_steady=" << format_full(ss.t_steady)
                  << " deltaF_ss=" << format_full(ss.delta_f_ss)
                  << " deltaS_ss=" << format_full(ss.delta_s_ss)
                  << " deltaE_ss=" << format_full(ss.delta_e_ss) << "\n";
    }
    std::cout << "wrote " << output_path(cfg, "trajectory.csv") << " (" << traj.records.size()
              << " records)\n";
    return 0;
}

int run_sweep_mode(const RunConfig& cfg) {
    const SweepResult result = run_sweep(cfg.sweep_spec());
    write_sweep(result, cfg, output_path(cfg, "sweep.csv"));
    for (const CombinationSummary& s : result.summaries) {
        std::cout << "n_opt(gamma=" << format_full(s.gamma) << ", A=" << format_full(s.amplitude)
                  << ", nbar=" << format_full(s.nbar) << ") = " << s.n_opt
                  << " objective=" << format_full(s.objective_value)
                  << (s.from_converged_only ? "" : " [flagged: no converged entries]")
                  << (s.unimodal ? "" : " [non-unimodal]") << "\n";
    }
    std::cout << "wrote " << output_path(cfg, "sweep.csv") << " (" << result.entries.size()
              << " grid points)\n";
    return 0;
}

int run_oracle_mode(const RunConfig& cfg) {
    const OracleSummary s = run_oracle_report(cfg, output_path(cfg, "oracle.csv"));
    std::cout << "analytic_omega=" << format_full(s.analytic_omega)
              << (s.overdamped ? " (overdamped)" : "") << " fitted_omega=";
    if (s.fitted_omega) std::cout << format_full(*s.fitted_omega);
    else std::cout << "n/a";
    std::cout << " max_abs_dev_closed=" << format_full(s.max_abs_dev_closed)
              << " max_abs_dev_bloch=" << format_full(s.max_abs_dev_bloch) << "\n";
    std::cout << "wrote " << output_path(cfg, "oracle.csv") << "\n";
    return 0;
}

int run_hp_compare(const RunConfig& cfg) {
    const SimulationParams& p = cfg.params;
    const CollectiveOperators ops = build_collective(p.n_atoms);
    const ComplexMatrix rho0 = gibbs_state(ops, p.omega0, p.bath_temperature());
    const Trajectory dicke = integrate(p, ops, rho0);
    int truncation = 0;
    const Trajectory hp = integrate_hp_auto(p, {}, truncation);
    write_hp_comparison(dicke, hp, truncation, cfg, output_path(cfg, "hp_compare.csv"));
    std::cout << "holstein-primakoff truncation: " << truncation << " levels\n";
    std::cout << "wrote " << output_path(cfg, "hp_compare.csv") << "\n";
    return 0;
}

int run_parallel_compare(const RunConfig& cfg) {
    const ParallelComparison cmp = parallel_comparison(cfg.params.n_atoms, cfg.params);
    write_parallel_comparison(cmp, cfg.params.n_atoms, cfg,
                              output_path(cfg, "parallel_compare.csv"));
    std::cout << "collective deltaF_ss=" << format_full(cmp.collective_delta_f)
              << " vs parallel N x single=" << format_full(cmp.parallel_delta_f) << "\n";
    std::cout << "wrote " << output_path(cfg, "parallel_compare.csv") << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qbsim: driven-dissipative charging of a collective N-atom quantum battery"};
    app.set_help_flag("--help,-h", "print usage");

    bool show_version = false;
    app.add_flag("--version", show_version, "print version and exit");

    std::string mode_positional;
    app.add_option("MODE", mode_positional,
                   "run mode: simulate | sweep | oracle | hp-compare | parallel-compare");

    std::string config_path;
    app.add_option("--config", config_path, "flat key = value configuration file");

    const auto& table = flag_table();
    std::vector<std::string> storage(table.size());
    std::vector<CLI::Option*> options(table.size());
    for (size_t i = 0; i < table.size(); ++i) {
        options[i] = app.add_option(table[i].second, storage[i], "sets config key '" + table[i].first + "'");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    if (show_version) {
        std::cout << "qbsim " << qbsim::kVersion << "\n";
        return 0;
    }

    try {
        RunConfig cfg; // built-in defaults
        if (!config_path.empty()) apply_config_file(cfg, config_path);
        for (size_t i = 0; i < table.size(); ++i) {
            if (options[i]->count() > 0) apply_key_value(cfg, table[i].first, storage[i], "flag");
        }
        if (!mode_positional.empty()) apply_key_value(cfg, "mode", mode_positional, "flag");

        for (const std::string& line : provenance_lines(cfg)) std::cerr << "config: " << line << "\n";
        cfg.validate();

        std::error_code ec;
        std::filesystem::create_directories(cfg.output_dir, ec);
        if (ec) throw IoError("cannot create output directory '" + cfg.output_dir + "'");

        switch (*cfg.mode) {
            case RunMode::simulate: return run_simulate(cfg);
            case RunMode::sweep: return run_sweep_mode(cfg);
            case RunMode::oracle: return run_oracle_mode(cfg);
            case RunMode::hp_compare: return run_hp_compare(cfg);
            case RunMode::parallel_compare: return run_parallel_compare(cfg);
        }
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
