#include "qbsim/sweep.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "qbsim/errors.hpp"

namespace qbsim {

namespace {

SimulationParams grid_params(const SimulationParams& base, double gamma, double amplitude,
                             double nbar, int n_atoms) {
    SimulationParams p = base;
    p.gamma = gamma;
    p.amplitude = amplitude;
    p.nbar = nbar;
    p.n_atoms = n_atoms;
    return p;
}

SweepEntry run_grid_point(const SimulationParams& base, double gamma, double amplitude,
                          double nbar, int n_atoms) {
    SweepEntry entry;
    entry.n_atoms = n_atoms;
    entry.gamma = gamma;
    entry.amplitude = amplitude;
    entry.nbar = nbar;

    try {
        SimulationParams p = grid_params(base, gamma, amplitude, nbar, n_atoms);
        p.validate();
        const CollectiveOperators ops = build_collective(n_atoms);
        const ComplexMatrix rho0 = gibbs_state(ops, p.omega0, p.bath_temperature());
        IntegrationOptions opt;
        opt.stop_when_steady = true;

        Trajectory traj = integrate(p, ops, rho0, opt);
        SteadyStateResult res = detect_steady_state(traj, p);
        entry.t_max_used = p.t_max;
        if (!res.converged) {
            // relaxation may be slower than the configured horizon; one retry
            p.t_max *= 2.0;
            traj = integrate(p, ops, rho0, opt);
            res = detect_steady_state(traj, p);
            entry.t_max_used = p.t_max;
            entry.retried = true;
        }
        entry.result = res;
    } catch (const std::exception& e) {
        entry.failed = true;
        entry.error = e.what();
    }
    return entry;
}

double objective_value(const SweepEntry& e, SweepObjective obj) {
    const double f = e.result.delta_f_ss;
    return obj == SweepObjective::delta_f_per_atom ? f / e.n_atoms : f;
}

CombinationSummary summarize(const std::vector<const SweepEntry*>& group, const SweepSpec& spec) {
    CombinationSummary s;
    s.gamma = group.front()->gamma;
    s.amplitude = group.front()->amplitude;
    s.nbar = group.front()->nbar;

    std::vector<const SweepEntry*> usable;
    for (const SweepEntry* e : group)
        if (!e->failed && e->result.converged) usable.push_back(e);
    s.from_converged_only = !usable.empty();
    if (usable.empty()) {
        for (const SweepEntry* e : group)
            if (!e->failed) usable.push_back(e);
    }
    if (usable.empty()) {
        s.n_opt = -1;
        return s;
    }

    const SweepEntry* best = usable.front();
    for (const SweepEntry* e : usable) {
        if (objective_value(*e, spec.objective) > objective_value(*best, spec.objective)) best = e;
    }
    s.n_opt = best->n_atoms;
    s.objective_value = objective_value(*best, spec.objective);

    // unimodality over the full (non-failed) N series, flat steps ignored
    const double band = spec.base.ss_tolerance * spec.base.omega0;
    bool falling = false;
    for (size_t i = 1; i < group.size(); ++i) {
        if (group[i]->failed || group[i - 1]->failed) continue;
        const double d = objective_value(*group[i], spec.objective) -
                         objective_value(*group[i - 1], spec.objective);
        if (std::abs(d) <= band) continue;
        if (d < 0.0) {
            falling = true;
        } else if (falling) {
            s.unimodal = false;
            break;
        }
    }
    return s;
}

} // namespace

SweepResult run_sweep(const SweepSpec& spec) {
    if (spec.n_min < 1 || spec.n_max < spec.n_min) {
        throw ConfigError("invalid sweep range: require 1 <= n_min <= n_max");
    }
    for (double g : spec.gamma_values)
        if (g < 0.0) throw ConfigError("invalid parameter 'sweep.gamma_list': values must be >= 0");
    for (double a : spec.amplitude_values)
        if (a < 0.0) throw ConfigError("invalid parameter 'sweep.amplitude_list': values must be >= 0");
    for (double nb : spec.nbar_values)
        if (nb < 0.0) throw ConfigError("invalid parameter 'sweep.nbar_list': values must be >= 0");

    const std::vector<double> gammas =
        spec.gamma_values.empty() ? std::vector<double>{spec.base.gamma} : spec.gamma_values;
    const std::vector<double> amplitudes =
        spec.amplitude_values.empty() ? std::vector<double>{spec.base.amplitude} : spec.amplitude_values;
    const std::vector<double> nbars =
        spec.nbar_values.empty() ? std::vector<double>{spec.base.nbar} : spec.nbar_values;

    struct Task {
        double gamma, amplitude, nbar;
        int n_atoms;
    };
    std::vector<Task> tasks;
    for (double g : gammas)
        for (double a : amplitudes)
            for (double nb : nbars)
                for (int n = spec.n_min; n <= spec.n_max; ++n) tasks.push_back({g, a, nb, n});

    SweepResult result;
    result.spec = spec;
    result.entries.resize(tasks.size());

    const unsigned hw = std::thread::hardware_concurrency();
    const size_t workers = std::min<size_t>(std::max(1u, hw), tasks.size());
    std::atomic<size_t> next{0};
    auto drain = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& t = tasks[i];
            result.entries[i] = run_grid_point(spec.base, t.gamma, t.amplitude, t.nbar, t.n_atoms);
        }
    };
    if (workers <= 1) {
        drain();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (size_t w = 0; w < workers; ++w) pool.emplace_back(drain);
        for (std::thread& th : pool) th.join();
    }

    const size_t per_combo = static_cast<size_t>(spec.n_max - spec.n_min + 1);
    for (size_t base = 0; base < result.entries.size(); base += per_combo) {
        std::vector<const SweepEntry*> group;
        for (size_t k = 0; k < per_combo; ++k) group.push_back(&result.entries[base + k]);
        result.summaries.push_back(summarize(group, spec));
    }
    return result;
}

int find_optimal_n(const SweepResult& result, double gamma, double amplitude, double nbar) {
    const SweepEntry* best = nullptr;
    bool combo_present = false;
    for (const SweepEntry& e : result.entries) {
        if (e.gamma != gamma || e.amplitude != amplitude || e.nbar != nbar) continue;
        combo_present = true;
        if (e.failed || !e.result.converged) continue;
        if (!best ||
            objective_value(e, result.spec.objective) > objective_value(*best, result.spec.objective)) {
            best = &e;
        }
    }
    if (!combo_present) {
        throw std::invalid_argument("find_optimal_n: no entries for the requested combination");
    }
    if (!best) throw NumericalError("find_optimal_n: no converged entries for the combination");
    return best->n_atoms;
}

ParallelComparison parallel_comparison(int n_atoms, const SimulationParams& base) {
    if (n_atoms < 1) throw std::invalid_argument("parallel_comparison: n_atoms must be >= 1");

    auto steady_for = [&](int n) {
        SweepEntry e = run_grid_point(base, base.gamma, base.amplitude, base.nbar, n);
        if (e.failed) throw NumericalError("parallel_comparison: run failed for N=" +
                                           std::to_string(n) + ": " + e.error);
        return e.result;
    };

    ParallelComparison cmp;
    cmp.collective = steady_for(n_atoms);
    cmp.single_atom = steady_for(1);
    cmp.collective_delta_f = cmp.collective.delta_f_ss;
    cmp.parallel_delta_f = n_atoms * cmp.single_atom.delta_f_ss;
    cmp.collective_delta_s = cmp.collective.delta_s_ss;
    cmp.parallel_delta_s = n_atoms * cmp.single_atom.delta_s_ss;
    return cmp;
}

} // namespace qbsim
