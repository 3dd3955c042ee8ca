#include "qbsim/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "qbsim/errors.hpp"
#include "qbsim/version.hpp"

namespace qbsim {

namespace {

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return out;
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw IoError("write to '" + path + "' failed");
}

} // namespace

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_metadata(const RunConfig& config, const std::string& data_path) {
    const std::string path = data_path + ".meta";
    std::ofstream out = open_for_write(path);
    out << "# qbsim " << kVersion << "\n";
    out << serialize_config(config);
    finish(out, path);
}

void write_trajectory(const Trajectory& traj, const RunConfig& config, const std::string& path) {
    if (traj.records.empty()) throw std::invalid_argument("write_trajectory: empty trajectory");
    std::ofstream out = open_for_write(path);
    out << "t,E,S,F,deltaF,deltaE,deltaS,W,Q,H_total,eta,first_law_residual,"
           "trace_error,min_eigenvalue\n";
    for (size_t i = 0; i < traj.records.size(); ++i) {
        const ThermoRecord& r = traj.records[i];
        const StateDiagnostics& d = traj.diagnostics[i];
        out << format_full(r.t) << ',' << format_full(r.energy) << ',' << format_full(r.entropy)
            << ',' << format_full(r.free_energy) << ',' << format_full(r.delta_f) << ','
            << format_full(r.delta_e) << ',' << format_full(r.delta_s) << ','
            << format_full(r.work) << ',' << format_full(r.heat) << ','
            << format_full(r.total_energy) << ',';
        if (r.eta) out << format_full(*r.eta);
        out << ',' << format_full(r.first_law_residual) << ',' << format_full(d.trace_error) << ','
            << format_full(d.min_eigenvalue) << '\n';
    }
    finish(out, path);
    write_metadata(config, path);
}

void write_sweep(const SweepResult& result, const RunConfig& config, const std::string& path) {
    if (result.entries.empty()) throw std::invalid_argument("write_sweep: empty sweep result");
    std::ofstream out = open_for_write(path);
    out << "N,gamma,amplitude,nbar,deltaF_ss,deltaF_ss_per_atom,deltaS_ss,deltaE_ss,"
           "t_steady,converged\n";
    for (const SweepEntry& e : result.entries) {
        if (e.failed) {
            out << e.n_atoms << ',' << format_full(e.gamma) << ',' << format_full(e.amplitude)
                << ',' << format_full(e.nbar) << ",,,,,," << "error\n";
            continue;
        }
        out << e.n_atoms << ',' << format_full(e.gamma) << ',' << format_full(e.amplitude) << ','
            << format_full(e.nbar) << ',' << format_full(e.result.delta_f_ss) << ','
            << format_full(e.result.delta_f_ss / e.n_atoms) << ','
            << format_full(e.result.delta_s_ss) << ',' << format_full(e.result.delta_e_ss) << ','
            << format_full(e.result.t_steady) << ',' << (e.result.converged ? "true" : "false")
            << '\n';
    }
    for (const CombinationSummary& s : result.summaries) {
        out << "# n_opt," << format_full(s.gamma) << ',' << format_full(s.amplitude) << ','
            << format_full(s.nbar) << ',' << s.n_opt << ',' << format_full(s.objective_value)
            << ',' << (s.from_converged_only ? "converged" : "flagged") << ','
            << (s.unimodal ? "unimodal" : "non-unimodal") << '\n';
    }
    finish(out, path);
    write_metadata(config, path);
}

void write_hp_comparison(const Trajectory& dicke, const Trajectory& hp, int truncation_dim,
                         const RunConfig& config, const std::string& path) {
    std::ofstream out = open_for_write(path);
    const double scale = config.params.n_atoms * config.params.omega0;
    out << "# holstein_primakoff_truncation," << truncation_dim << "\n";
    out << "t,deltaE_dicke,deltaE_hp,abs_diff,rel_diff\n";
    const size_t rows = std::min(dicke.records.size(), hp.records.size());
    for (size_t i = 0; i < rows; ++i) {
        const double de_d = dicke.records[i].delta_e;
        const double de_h = hp.records[i].delta_e;
        out << format_full(dicke.records[i].t) << ',' << format_full(de_d) << ','
            << format_full(de_h) << ',' << format_full(std::abs(de_d - de_h)) << ','
            << format_full(std::abs(de_d - de_h) / scale) << '\n';
    }
    finish(out, path);
    write_metadata(config, path);
}

void write_parallel_comparison(const ParallelComparison& cmp, int n_atoms, const RunConfig& config,
                               const std::string& path) {
    std::ofstream out = open_for_write(path);
    out << "quantity,collective,parallel_n_times_single\n";
    out << "deltaF_ss," << format_full(cmp.collective_delta_f) << ','
        << format_full(cmp.parallel_delta_f) << '\n';
    out << "deltaS_ss," << format_full(cmp.collective_delta_s) << ','
        << format_full(cmp.parallel_delta_s) << '\n';
    out << "deltaE_ss," << format_full(cmp.collective.delta_e_ss) << ','
        << format_full(n_atoms * cmp.single_atom.delta_e_ss) << '\n';
    out << "t_steady," << format_full(cmp.collective.t_steady) << ','
        << format_full(cmp.single_atom.t_steady) << '\n';
    out << "converged," << (cmp.collective.converged ? "true" : "false") << ','
        << (cmp.single_atom.converged ? "true" : "false") << '\n';
    finish(out, path);
    write_metadata(config, path);
}

} // namespace qbsim
