#ifndef QBSIM_SWEEP_HPP
#define QBSIM_SWEEP_HPP

#include <string>
#include <vector>

#include "qbsim/lindblad.hpp"
#include "qbsim/params.hpp"

namespace qbsim {

enum class SweepObjective { total_delta_f, delta_f_per_atom };

// Grid of charging runs over N (and optionally gamma, A, nbar). Empty lists
// fall back to the corresponding base value.
struct SweepSpec {
    SimulationParams base;
    int n_min = 1;
    int n_max = 1;
    std::vector<double> gamma_values;
    std::vector<double> amplitude_values;
    std::vector<double> nbar_values;
    SweepObjective objective = SweepObjective::total_delta_f;
};

struct SweepEntry {
    int n_atoms = 0;
    double gamma = 0.0, amplitude = 0.0, nbar = 0.0;
    SteadyStateResult result;
    double t_max_used = 0.0;
    bool retried = false; // one automatic retry at 2 t_max before flagging
    bool failed = false;  // integrator error attached to this grid point
    std::string error;
};

// Optimum per (gamma, amplitude, nbar) combination. When no entry converged
// (for example gamma = 0) the argmax falls back to the flagged last-window
// values and from_converged_only is false.
struct CombinationSummary {
    double gamma = 0.0, amplitude = 0.0, nbar = 0.0;
    int n_opt = 0;
    double objective_value = 0.0;
    bool from_converged_only = true;
    // exactly one rise->fall switch in the first differences of the objective
    // (within the steady-state tolerance band); informational, never fatal
    bool unimodal = true;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepEntry> entries; // deterministic order: gamma, A, nbar, N
    std::vector<CombinationSummary> summaries;
};

// Runs every grid point (in parallel over points, each point sequential) and
// collects per-combination optima. Deterministic: the result is identical
// regardless of worker count. Single-run errors are recorded on their grid
// point, never fatal to the sweep.
SweepResult run_sweep(const SweepSpec& spec);

// Argmax of the configured objective over converged entries of one parameter
// combination; ties break toward smaller N. Throws std::invalid_argument when
// the combination is absent and NumericalError when nothing converged.
int find_optimal_n(const SweepResult& result, double gamma, double amplitude, double nbar);

// One collective N-atom run against N independent single-atom units.
struct ParallelComparison {
    SteadyStateResult collective;
    SteadyStateResult single_atom;
    double collective_delta_f = 0.0;
    double parallel_delta_f = 0.0; // N x single-atom steady Delta F
    double collective_delta_s = 0.0;
    double parallel_delta_s = 0.0;
};

ParallelComparison parallel_comparison(int n_atoms, const SimulationParams& base);

} // namespace qbsim

#endif
