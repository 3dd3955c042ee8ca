#ifndef QBSIM_DICKE_HPP
#define QBSIM_DICKE_HPP

#include "qbsim/matrix.hpp"

namespace qbsim {

// Collective spin operators in the symmetric J = N/2 Dicke sector,
// basis |J, m_l> with m_l = l - N/2 for l = 0..N (ground state first).
// jpjm and jmjp cache the dissipator products J+J- and J-J+.
struct CollectiveOperators {
    int n_atoms = 0;
    ComplexMatrix jx, jy, jz, jplus, jminus, jpjm, jmjp;

    int dim() const noexcept { return n_atoms + 1; }
};

CollectiveOperators build_collective(int n_atoms);

// T = omega / ln(1 + 1/nbar); nbar = 0 maps to T = 0.
double nbar_to_temperature(double nbar, double omega);

// Inverse of the above: n(T) = 1/(e^{omega/T} - 1), with n(0) = 0.
double bose_occupation(double temperature, double omega);

// Diagonal Gibbs state exp(-omega0 Jz / T)/Z restricted to the Dicke sector.
// T = 0 returns the projector onto the lowest Jz level. Trace is normalized
// to 1 exactly after exponentiation.
ComplexMatrix gibbs_state(const CollectiveOperators& ops, double omega0, double temperature);

// Truncated bosonic ladder operators on an M-dimensional Fock space.
struct BosonOperators {
    int truncation_dim = 0;
    ComplexMatrix b, bdag, number;
};

BosonOperators build_boson(int truncation_dim);

// Truncated thermal state exp(-omega0 n / T)/Z on the Fock ladder.
ComplexMatrix thermal_boson_state(const BosonOperators& ops, double omega0, double temperature);

} // namespace qbsim

#endif
