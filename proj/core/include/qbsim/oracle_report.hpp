#ifndef QBSIM_ORACLE_REPORT_HPP
#define QBSIM_ORACLE_REPORT_HPP

#include <optional>
#include <string>

#include "qbsim/config.hpp"

namespace qbsim {

struct OracleSummary {
    std::optional<double> fitted_omega; // peak-spacing estimate from the numeric E(t)
    double analytic_omega = 0.0;        // sqrt(A^2 - gamma^2 chi^2/4)
    bool overdamped = false;
    double max_abs_dev_closed = 0.0; // full numeric vs closed form
    double max_abs_dev_bloch = 0.0;  // full numeric vs RWA Bloch integration
};

// Side-by-side single-atom comparison of the full master-equation E(t), the
// closed-form E(t) and the RWA Bloch integration, written as a delimited
// table with deviation columns and a '# fitted_omega...' footer. Deviations
// are reported, not asserted. Requires n_atoms = 1.
OracleSummary run_oracle_report(const RunConfig& config, const std::string& path);

} // namespace qbsim

#endif
