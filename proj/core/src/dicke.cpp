#include "qbsim/dicke.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qbsim {

CollectiveOperators build_collective(int n_atoms) {
    if (n_atoms < 1) throw std::invalid_argument("build_collective: n_atoms must be >= 1");
    const int n = n_atoms + 1;
    const double j = 0.5 * n_atoms;

    CollectiveOperators ops;
    ops.n_atoms = n_atoms;
    ops.jz = ComplexMatrix(n);
    ops.jplus = ComplexMatrix(n);
    for (int l = 0; l < n; ++l) {
        const double m = l - j;
        ops.jz(l, l) = m;
        if (l + 1 < n) ops.jplus(l + 1, l) = std::sqrt((j - m) * (j + m + 1.0));
    }
    ops.jminus = ops.jplus.adjoint();

    ops.jx = (ops.jplus + ops.jminus) * Complex(0.5, 0.0);
    ops.jy = (ops.jplus - ops.jminus) * Complex(0.0, -0.5);
    ops.jpjm = matmul(ops.jplus, ops.jminus);
    ops.jmjp = matmul(ops.jminus, ops.jplus);
    return ops;
}

double nbar_to_temperature(double nbar, double omega) {
    if (nbar < 0.0) throw std::invalid_argument("nbar_to_temperature: nbar must be >= 0");
    if (nbar == 0.0) return 0.0;
    return omega / std::log1p(1.0 / nbar);
}

double bose_occupation(double temperature, double omega) {
    if (temperature <= 0.0) return 0.0;
    return 1.0 / std::expm1(omega / temperature);
}

namespace {

// Boltzmann weights over an equally spaced ladder with level spacing omega0,
// measured from the ground level; T = 0 collapses onto the ground level.
ComplexMatrix ladder_gibbs(int n, double omega0, double temperature) {
    ComplexMatrix rho(n);
    if (temperature == 0.0) {
        rho(0, 0) = 1.0;
        return rho;
    }
    std::vector<double> w(n);
    double z = 0.0;
    for (int l = 0; l < n; ++l) {
        w[l] = std::exp(-omega0 * l / temperature);
        z += w[l];
    }
    for (int l = 0; l < n; ++l) rho(l, l) = w[l] / z;
    return rho;
}

} // namespace

ComplexMatrix gibbs_state(const CollectiveOperators& ops, double omega0, double temperature) {
    if (omega0 <= 0.0) throw std::invalid_argument("gibbs_state: omega0 must be > 0");
    if (temperature < 0.0) throw std::invalid_argument("gibbs_state: temperature must be >= 0");
    return ladder_gibbs(ops.dim(), omega0, temperature);
}

BosonOperators build_boson(int truncation_dim) {
    if (truncation_dim < 2) throw std::invalid_argument("build_boson: truncation_dim must be >= 2");
    const int m = truncation_dim;
    BosonOperators ops;
    ops.truncation_dim = m;
    ops.bdag = ComplexMatrix(m);
    for (int k = 0; k + 1 < m; ++k) ops.bdag(k + 1, k) = std::sqrt(k + 1.0);
    ops.b = ops.bdag.adjoint();
    ops.number = matmul(ops.bdag, ops.b);
    return ops;
}

ComplexMatrix thermal_boson_state(const BosonOperators& ops, double omega0, double temperature) {
    if (temperature < 0.0) throw std::invalid_argument("thermal_boson_state: temperature must be >= 0");
    return ladder_gibbs(ops.truncation_dim, omega0, temperature);
}

} // namespace qbsim
