#ifndef QBSIM_OUTPUT_HPP
#define QBSIM_OUTPUT_HPP

#include <string>

#include "qbsim/config.hpp"
#include "qbsim/lindblad.hpp"
#include "qbsim/sweep.hpp"

namespace qbsim {

// Full-precision (17 significant digits) decimal rendering used in every
// emitted file; output is byte-stable across runs.
std::string format_full(double v);

// Writes the resolved configuration plus the artifact version next to a data
// file ("<path>.meta"). The metadata is itself a parseable config document,
// so the data file can be reproduced from it alone.
void write_metadata(const RunConfig& config, const std::string& data_path);

// Comma-delimited trajectory table: t, E, S, F, deltaF, deltaE, deltaS, W, Q,
// H_total, eta (empty when undefined), first_law_residual, trace_error,
// min_eigenvalue. UTF-8, LF line endings, header row first. Also emits the
// metadata sidecar.
void write_trajectory(const Trajectory& traj, const RunConfig& config, const std::string& path);

// One row per grid point (N, gamma, A, nbar, deltaF_ss, deltaF_ss_per_atom,
// deltaS_ss, deltaE_ss, t_steady, converged) followed by '# n_opt' summary
// rows per parameter combination. Also emits the metadata sidecar.
void write_sweep(const SweepResult& result, const RunConfig& config, const std::string& path);

// Comparison table for one collective run vs N independent single atoms.
void write_parallel_comparison(const ParallelComparison& cmp, int n_atoms, const RunConfig& config,
                               const std::string& path);

// Dicke vs Holstein-Primakoff energy curves on the shared record grid:
// t, deltaE_dicke, deltaE_hp, abs_diff, rel_diff (scaled by N omega0).
void write_hp_comparison(const Trajectory& dicke, const Trajectory& hp, int truncation_dim,
                         const RunConfig& config, const std::string& path);

} // namespace qbsim

#endif
