#include "qbsim/thermo.hpp"

#include <cmath>
#include <string>

#include "qbsim/eigen.hpp"
#include "qbsim/errors.hpp"

namespace qbsim {

double internal_energy(const ComplexMatrix& rho, const CollectiveOperators& ops, double omega0) {
    return omega0 * expectation(ops.jz, rho);
}

double von_neumann_entropy(std::span<const double> eigenvalues) {
    double s = 0.0;
    for (double lam : eigenvalues) {
        if (lam < -1e-8) {
            throw NumericalError("von_neumann_entropy: eigenvalue " + std::to_string(lam) +
                                 " below -1e-8; state not positive");
        }
        if (lam <= 0.0) continue; // clamp the [-1e-10, 0) band to zero
        s -= lam * std::log(lam);
    }
    return s;
}

double von_neumann_entropy(const ComplexMatrix& rho) {
    return von_neumann_entropy(hermitian_eigenvalues(rho));
}

double free_energy(double energy, double entropy, double temperature) {
    return energy - temperature * entropy;
}

ComplexMatrix hamiltonian(const CollectiveOperators& ops, const SimulationParams& p, double t) {
    ComplexMatrix h = ops.jz * Complex(p.omega0, 0.0);
    const double drive = p.amplitude * std::cos(p.omega * t);
    h += (ops.jplus + ops.jminus) * Complex(drive, 0.0);
    return h;
}

double total_energy(const ComplexMatrix& rho, const CollectiveOperators& ops,
                    const SimulationParams& p, double t) {
    const double drive = p.amplitude * std::cos(p.omega * t);
    return internal_energy(rho, ops, p.omega0) +
           drive * expectation(ops.jplus + ops.jminus, rho);
}

double drive_work_rate(const ComplexMatrix& rho, const CollectiveOperators& ops,
                       const SimulationParams& p, double t) {
    if (p.amplitude == 0.0) return 0.0;
    return -p.amplitude * p.omega * std::sin(p.omega * t) *
           expectation(ops.jplus + ops.jminus, rho);
}

ComplexMatrix dissipator(const ComplexMatrix& rho, const CollectiveOperators& ops,
                         const SimulationParams& p) {
    const double down = p.gamma * (p.nbar + 1.0);
    const double up = p.gamma * p.nbar;
    ComplexMatrix d = matmul(ops.jminus, matmul(rho, ops.jplus)) * Complex(2.0 * down, 0.0);
    d -= anticommutator(ops.jpjm, rho) * Complex(down, 0.0);
    if (up > 0.0) {
        d += matmul(ops.jplus, matmul(rho, ops.jminus)) * Complex(2.0 * up, 0.0);
        d -= anticommutator(ops.jmjp, rho) * Complex(up, 0.0);
    }
    return d;
}

double bath_heat_rate(const ComplexMatrix& rho, const CollectiveOperators& ops,
                      const SimulationParams& p, double t) {
    if (p.gamma == 0.0) return 0.0;
    const ComplexMatrix d = dissipator(rho, ops, p);
    const ComplexMatrix h = hamiltonian(ops, p, t);
    return -trace(matmul(d, h)).real();
}

std::optional<double> efficiency(double delta_f, double work, double omega0) {
    if (std::abs(work) <= 1e-9 * omega0) return std::nullopt;
    return delta_f / work;
}

} // namespace qbsim
