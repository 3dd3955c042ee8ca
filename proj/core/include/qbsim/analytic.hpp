#ifndef QBSIM_ANALYTIC_HPP
#define QBSIM_ANALYTIC_HPP

#include <optional>
#include <span>
#include <vector>

#include "qbsim/matrix.hpp"
#include "qbsim/params.hpp"

namespace qbsim {

// chi = 1 + 2 nbar
double chi(double nbar);

// Omega = sqrt(A^2 - gamma^2 chi^2 / 4). When the radicand is negative the
// motion is overdamped; the marker carries |Omega|.
struct RabiFrequency {
    double value = 0.0;
    bool overdamped = false;
};
RabiFrequency rabi_frequency(double amplitude, double gamma, double nbar);

// Closed-form <sigma_z>(tau) of the resonant RWA Bloch system for a
// single-atom battery started from the Gibbs state (alpha = <sigma_z>(0),
// transverse components zero). Steady value -2 gamma^2 chi/(2 gamma^2 chi^2
// + A^2), envelope exp(-3 gamma chi tau / 2). In the overdamped regime the
// trigonometric branch continues analytically to hyperbolic functions.
double sigma_z_closed_form(double tau, double amplitude, double gamma, double nbar, double alpha);

// Zero-temperature single-atom energy
//   E = -4 w0 g^2/(8 g^2 + A^2) [1 + A^2/(8 g^2) e^{-3 g tau/2}
//        (cos Omega tau + 3 g/(2 Omega) sin Omega tau)],  Omega = sqrt(A^2 - g^2/4).
// Requires A > gamma/2 (underdamped); gamma = 0 reduces to -(w0/2) cos(A tau).
double energy_zero_temp(double tau, double amplitude, double gamma, double omega0);

// <sigma_z> and <sigma_+> of the rotating-frame Bloch system.
struct BlochState {
    double sz = 0.0;
    Complex splus;
};

struct BlochTrajectory {
    std::vector<double> times;
    std::vector<BlochState> states;
};

// RK4 integration of the resonant RWA Bloch equations
//   d<sz>/dt  = iA(<s-> - <s+>) - 2 gamma (chi <sz> + 1)
//   d<s+>/dt  = -i(A/2)<sz> - gamma chi <s+>
// with <s-> = conj(<s+>) enforced. Refuses off-resonant parameters: the
// rotating-wave reduction is only valid at omega = omega0.
BlochTrajectory integrate_bloch(const SimulationParams& p, double alpha);

// Oscillation frequency from the spacing of successive extrema of a sampled
// signal. The signal is first averaged over exactly one drive period (a
// boxcar that nulls the drive harmonics), extrema are picked with a 2%-of-
// range hysteresis and refined parabolically; the result is pi over the
// median spacing. Empty when fewer than two extrema survive.
std::optional<double> estimate_peak_frequency(std::span<const double> times,
                                              std::span<const double> values,
                                              double drive_period);

} // namespace qbsim

#endif
