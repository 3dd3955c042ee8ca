#ifndef QBSIM_LINDBLAD_HPP
#define QBSIM_LINDBLAD_HPP

#include <functional>
#include <vector>

#include "qbsim/dicke.hpp"
#include "qbsim/matrix.hpp"
#include "qbsim/params.hpp"
#include "qbsim/thermo.hpp"

namespace qbsim {

// Recorded history of one integration. States are kept only when requested
// (sweeps discard them); records and diagnostics are always thinned by
// record_stride, with t = 0 and the final step always present.
struct Trajectory {
    std::vector<double> times;
    std::vector<ComplexMatrix> states;
    std::vector<ThermoRecord> records;
    std::vector<StateDiagnostics> diagnostics;
};

struct SteadyStateResult {
    int n_atoms = 0;
    double delta_f_ss = 0.0;
    double delta_s_ss = 0.0;
    double delta_e_ss = 0.0;
    double t_steady = 0.0;
    bool converged = false;
};

struct IntegrationOptions {
    bool store_states = false;
    // End the run as soon as the steady-state criterion fires instead of
    // integrating to t_max. The reported records end at that point.
    bool stop_when_steady = false;
};

// Right-hand side of the master equation,
//   -i[omega0 Jz + A cos(omega t)(J+ + J-), rho]
//   + gamma(nbar+1)(2 J- rho J+ - {J+J-, rho})
//   + gamma nbar   (2 J+ rho J- - {J-J+, rho}),
// assembled from dense operator products. The integrator applies the same
// map through banded kernels; the two routes are cross-checked in tests.
ComplexMatrix liouvillian_rhs(const ComplexMatrix& rho, double t, const SimulationParams& p,
                              const CollectiveOperators& ops);

using RhsFunction = std::function<ComplexMatrix(const ComplexMatrix&, double)>;

// One classical RK4 step. The result is re-Hermitized as (rho + rho^dagger)/2
// and trace-renormalized; trace drift beyond 1e-8 in a single step signals a
// too-large dt and throws NumericalError.
ComplexMatrix rk4_step(const ComplexMatrix& rho, double t, double dt, const RhsFunction& rhs);

// Fixed-step RK4 integration of the master equation from rho0 (a valid
// density matrix) over [0, t_max]. Work and heat are accumulated through the
// RK4 stages at full step resolution. Every recorded state is validated:
// trace within 1e-8 of 1, Hermitian, smallest eigenvalue above
// -positivity_tolerance.
Trajectory integrate(const SimulationParams& p, const CollectiveOperators& ops,
                     const ComplexMatrix& rho0, const IntegrationOptions& options = {});

// Holstein-Primakoff analogue on a truncated Fock ladder:
//   H = omega0 (b^dag b - N/2) + A sqrt(N) cos(omega t)(b^dag + b)
// with collective rates gamma N (nbar+1) and gamma N nbar. Errors out if the
// top two Fock populations exceed 1e-8 (truncation overflow).
Trajectory integrate_hp(const SimulationParams& p, int truncation_dim,
                        const IntegrationOptions& options = {});

// integrate_hp with the smallest truncation dimension from {16, 24, 32, 48,
// 64} whose top two Fock populations stay below the 1e-8 threshold; the
// chosen dimension is returned through truncation_dim.
Trajectory integrate_hp_auto(const SimulationParams& p, const IntegrationOptions& options,
                             int& truncation_dim);

// Drive-period moving average of Delta F over the recorded trajectory.
// Steady once two consecutive pairs of adjacent period averages differ by
// less than ss_tolerance * omega0; reported values are the final period
// averages. Requires at least 3 full drive periods of records.
SteadyStateResult detect_steady_state(const Trajectory& traj, const SimulationParams& p);

} // namespace qbsim

#endif
