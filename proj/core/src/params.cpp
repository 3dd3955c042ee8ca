#include "qbsim/params.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qbsim/dicke.hpp"
#include "qbsim/errors.hpp"

namespace qbsim {

double SimulationParams::drive_period() const { return 2.0 * std::numbers::pi / omega; }

double SimulationParams::bath_temperature() const { return nbar_to_temperature(nbar, omega); }

double SimulationParams::resolved_dt() const {
    if (dt > 0.0) return dt;
    double h = drive_period() / 400.0;
    const double dissipation_rate = gamma * n_atoms * (2.0 * nbar + 1.0);
    if (dissipation_rate > 0.0) h = std::min(h, 1.0 / (40.0 * dissipation_rate));
    return h;
}

void SimulationParams::validate() const {
    auto fail = [](const std::string& key, const std::string& why) {
        throw ConfigError("invalid parameter '" + key + "': " + why);
    };
    if (!(omega0 > 0.0)) fail("omega0", "must be > 0");
    if (!(omega > 0.0)) fail("omega", "must be > 0");
    if (amplitude < 0.0) fail("amplitude", "must be >= 0");
    if (gamma < 0.0) fail("gamma", "must be >= 0");
    if (nbar < 0.0) fail("nbar", "must be >= 0");
    if (n_atoms < 1) fail("n_atoms", "must be >= 1");
    if (!(t_max > 0.0)) fail("t_max", "must be > 0");
    if (dt < 0.0) fail("dt", "must be >= 0 (0 selects the default step)");
    if (dt > 0.0 && dt > drive_period() / 200.0)
        fail("dt", "must be <= (2pi/omega)/200 to resolve the drive");
    if (record_stride < 1) fail("record_stride", "must be >= 1");
    if (!(ss_tolerance > 0.0)) fail("ss_tolerance", "must be > 0");
    if (!(positivity_tolerance > 0.0)) fail("positivity_tolerance", "must be > 0");
}

} // namespace qbsim
