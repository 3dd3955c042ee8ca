#ifndef QBSIM_EIGEN_HPP
#define QBSIM_EIGEN_HPP

#include <vector>

#include "qbsim/matrix.hpp"

namespace qbsim {

struct HermitianEigenDecomposition {
    std::vector<double> eigenvalues; // ascending
    ComplexMatrix eigenvectors;      // orthonormal, one eigenvector per column
};

// Cyclic complex Jacobi diagonalization of a Hermitian matrix. Deterministic:
// identical input produces identical output. Input must be Hermitian within
// 1e-10 (max entry of |h - h^dagger|); throws std::invalid_argument otherwise
// and NumericalError if the sweep budget is exhausted.
HermitianEigenDecomposition hermitian_eigen(const ComplexMatrix& h);

// Eigenvalues only (ascending); same algorithm without accumulating vectors.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

} // namespace qbsim

#endif
