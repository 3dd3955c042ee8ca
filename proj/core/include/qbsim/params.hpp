#ifndef QBSIM_PARAMS_HPP
#define QBSIM_PARAMS_HPP

namespace qbsim {

// All physical and numerical parameters of one charging run.
// Defaults mirror the standard operating point: omega = omega0 = 2,
// A = 0.5 omega, gamma = 0.03 omega, nbar = 0.2.
struct SimulationParams {
    double omega0 = 2.0;    // atomic splitting
    double omega = 2.0;     // drive frequency
    double amplitude = 1.0; // drive strength A
    double gamma = 0.06;    // single-atom dissipation rate
    double nbar = 0.2;      // bath occupancy n(T)
    int n_atoms = 1;
    double t_max = 600.0;
    double dt = 0.0; // 0 selects the default step, see resolved_dt()
    int record_stride = 10;
    double ss_tolerance = 1e-6;
    double positivity_tolerance = 1e-8;

    double drive_period() const;
    double bath_temperature() const; // from nbar at the drive frequency

    // Default step (2pi/omega)/400, tightened to 1/(40 gamma N (2 nbar + 1))
    // when dissipation is the fastest scale; user-supplied dt wins if set.
    double resolved_dt() const;

    // Throws ConfigError naming the offending key.
    void validate() const;
};

} // namespace qbsim

#endif
