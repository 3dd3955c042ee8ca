#ifndef QBSIM_THERMO_HPP
#define QBSIM_THERMO_HPP

#include <optional>
#include <span>

#include "qbsim/dicke.hpp"
#include "qbsim/matrix.hpp"
#include "qbsim/params.hpp"

namespace qbsim {

// Per-time-step thermodynamic observables. Deltas are measured from t = 0;
// work is the energy injected by the drive, heat is positive when it flows
// into the bath, so W = Q + Delta<H> along an exact trajectory.
struct ThermoRecord {
    double t = 0.0;
    double energy = 0.0;       // E = Tr(H_s rho)
    double entropy = 0.0;      // S = -Tr(rho ln rho)
    double free_energy = 0.0;  // F = E - T S
    double delta_f = 0.0;
    double delta_e = 0.0;
    double delta_s = 0.0;
    double work = 0.0;         // cumulative W
    double heat = 0.0;         // cumulative Q into the bath
    double total_energy = 0.0; // <H> including the drive term
    std::optional<double> eta; // Delta F / W, absent while |W| is negligible
    double first_law_residual = 0.0; // W - Q - Delta<H>
};

struct StateDiagnostics {
    double trace_error = 0.0;   // |Tr rho - 1|
    double min_eigenvalue = 0.0;
};

// omega0 <Jz>
double internal_energy(const ComplexMatrix& rho, const CollectiveOperators& ops, double omega0);

// -sum lambda ln lambda with 0 ln 0 = 0; eigenvalues in [-1e-10, 0) are
// clamped to zero, anything below -1e-8 throws NumericalError.
double von_neumann_entropy(std::span<const double> eigenvalues);
double von_neumann_entropy(const ComplexMatrix& rho);

// F = E - T S (k_B = 1)
double free_energy(double energy, double entropy, double temperature);

// H(t) = omega0 Jz + A cos(omega t) (J+ + J-)
ComplexMatrix hamiltonian(const CollectiveOperators& ops, const SimulationParams& p, double t);

// <H(t)>
double total_energy(const ComplexMatrix& rho, const CollectiveOperators& ops,
                    const SimulationParams& p, double t);

// Instantaneous work rate dW/dt = Tr(dH/dt rho) = -A omega sin(omega t) <J+ + J->
double drive_work_rate(const ComplexMatrix& rho, const CollectiveOperators& ops,
                       const SimulationParams& p, double t);

// Dissipative part of the master equation,
// gamma(nbar+1)(2 J- rho J+ - {J+J-, rho}) + gamma nbar (2 J+ rho J- - {J-J+, rho})
ComplexMatrix dissipator(const ComplexMatrix& rho, const CollectiveOperators& ops,
                         const SimulationParams& p);

// dQ/dt = -Tr(D[rho] H(t)); positive when energy leaves the system.
double bath_heat_rate(const ComplexMatrix& rho, const CollectiveOperators& ops,
                      const SimulationParams& p, double t);

// Delta F / W; empty while |W| < 1e-9 omega0 (early-time W crosses zero,
// division there is noise).
std::optional<double> efficiency(double delta_f, double work, double omega0);

} // namespace qbsim

#endif
