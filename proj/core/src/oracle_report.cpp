#include "qbsim/oracle_report.hpp"

#include <cmath>
#include <fstream>

#include "qbsim/analytic.hpp"
#include "qbsim/errors.hpp"
#include "qbsim/lindblad.hpp"
#include "qbsim/output.hpp"

namespace qbsim {

OracleSummary run_oracle_report(const RunConfig& config, const std::string& path) {
    const SimulationParams& p = config.params;
    p.validate();
    if (p.n_atoms != 1) throw ConfigError("oracle report requires n_atoms = 1");
    if (p.omega != p.omega0) {
        throw ConfigError("oracle report requires resonance omega = omega0 (the closed form and "
                          "the rotating-wave reduction assume it)");
    }

    const CollectiveOperators ops = build_collective(1);
    const ComplexMatrix rho0 = gibbs_state(ops, p.omega0, p.bath_temperature());
    const double alpha = rho0(1, 1).real() - rho0(0, 0).real(); // <sigma_z> at t=0

    const Trajectory traj = integrate(p, ops, rho0);
    const BlochTrajectory bloch = integrate_bloch(p, alpha);

    OracleSummary summary;
    const RabiFrequency omega = rabi_frequency(p.amplitude, p.gamma, p.nbar);
    summary.analytic_omega = omega.value;
    summary.overdamped = omega.overdamped;

    std::vector<double> energies(traj.records.size());
    for (size_t i = 0; i < traj.records.size(); ++i) energies[i] = traj.records[i].energy;
    summary.fitted_omega = estimate_peak_frequency(traj.times, energies, p.drive_period());

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << "# relative deviations are scaled by omega0/2\n";
    out << "t,E_numeric,E_closed_form,E_bloch,abs_dev_closed,rel_dev_closed,"
           "abs_dev_bloch,rel_dev_bloch\n";

    const double scale = 0.5 * p.omega0;
    const size_t rows = std::min(traj.records.size(), bloch.states.size());
    for (size_t i = 0; i < rows; ++i) {
        const double t = traj.times[i];
        const double e_num = traj.records[i].energy;
        const double e_closed =
            scale * sigma_z_closed_form(t, p.amplitude, p.gamma, p.nbar, alpha);
        const double e_bloch = scale * bloch.states[i].sz;
        const double dev_c = std::abs(e_num - e_closed);
        const double dev_b = std::abs(e_num - e_bloch);
        summary.max_abs_dev_closed = std::max(summary.max_abs_dev_closed, dev_c);
        summary.max_abs_dev_bloch = std::max(summary.max_abs_dev_bloch, dev_b);
        out << format_full(t) << ',' << format_full(e_num) << ',' << format_full(e_closed) << ','
            << format_full(e_bloch) << ',' << format_full(dev_c) << ','
            << format_full(dev_c / scale) << ',' << format_full(dev_b) << ','
            << format_full(dev_b / scale) << '\n';
    }

    out << "# fitted_omega,";
    if (summary.fitted_omega) out << format_full(*summary.fitted_omega);
    out << "\n# analytic_omega," << format_full(summary.analytic_omega) << ",overdamped,"
        << (summary.overdamped ? 1 : 0) << '\n';
    out << "# max_abs_dev_closed," << format_full(summary.max_abs_dev_closed) << '\n';
    out << "# max_abs_dev_bloch," << format_full(summary.max_abs_dev_bloch) << '\n';
    out.flush();
    if (!out) throw IoError("write to '" + path + "' failed");

    write_metadata(config, path);
    return summary;
}

} // namespace qbsim
