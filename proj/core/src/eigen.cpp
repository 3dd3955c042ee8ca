#include "qbsim/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qbsim/errors.hpp"

namespace qbsim {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& w) {
    double s = 0.0;
    const int n = w.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s += std::norm(w(i, j));
    return std::sqrt(2.0 * s);
}

// One cyclic Jacobi pass; returns the matrix diagonalized in place and the
// accumulated unitary in v (if non-null).
void jacobi(ComplexMatrix& w, ComplexMatrix* v) {
    const int n = w.dim();
    const double target = std::max(1e-300, 1e-14 * w.frobenius_norm());

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(w) <= target) return;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex beta = w(p, q);
                const double ab = std::abs(beta);
                if (ab == 0.0) continue;
                const double app = w(p, p).real();
                const double aqq = w(q, q).real();
                const double tau = (aqq - app) / (2.0 * ab);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex f = std::conj(beta) / ab; // phase that makes the pivot real

                // rows p,q: W <- U^dagger W
                for (int k = 0; k < n; ++k) {
                    const Complex wp = w(p, k);
                    const Complex wq = w(q, k);
                    w(p, k) = c * wp - s * std::conj(f) * wq;
                    w(q, k) = s * wp + c * std::conj(f) * wq;
                }
                // columns p,q: W <- W U
                for (int k = 0; k < n; ++k) {
                    const Complex wp = w(k, p);
                    const Complex wq = w(k, q);
                    w(k, p) = c * wp - s * f * wq;
                    w(k, q) = s * wp + c * f * wq;
                }
                w(p, q) = 0.0;
                w(q, p) = 0.0;
                w(p, p) = Complex(w(p, p).real(), 0.0);
                w(q, q) = Complex(w(q, q).real(), 0.0);

                if (v) {
                    for (int k = 0; k < n; ++k) {
                        const Complex vp = (*v)(k, p);
                        const Complex vq = (*v)(k, q);
                        (*v)(k, p) = c * vp - s * f * vq;
                        (*v)(k, q) = s * vp + c * f * vq;
                    }
                }
            }
        }
    }
    if (off_diagonal_norm(w) > target) {
        throw NumericalError("hermitian_eigen: Jacobi did not converge within " +
                             std::to_string(kMaxSweeps) + " sweeps");
    }
}

ComplexMatrix symmetrized(const ComplexMatrix& h) {
    if (h.hermiticity_defect() > 1e-10) {
        throw std::invalid_argument("hermitian_eigen: input not Hermitian within 1e-10");
    }
    const int n = h.dim();
    ComplexMatrix w(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
    return w;
}

std::vector<int> ascending_order(const std::vector<double>& ev) {
    std::vector<int> idx(ev.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return ev[a] < ev[b]; });
    return idx;
}

} // namespace

HermitianEigenDecomposition hermitian_eigen(const ComplexMatrix& h) {
    ComplexMatrix w = symmetrized(h);
    const int n = w.dim();
    ComplexMatrix v = ComplexMatrix::identity(n);
    jacobi(w, &v);

    std::vector<double> raw(n);
    for (int i = 0; i < n; ++i) raw[i] = w(i, i).real();
    const std::vector<int> idx = ascending_order(raw);

    HermitianEigenDecomposition d;
    d.eigenvalues.resize(n);
    d.eigenvectors = ComplexMatrix(n);
    for (int c = 0; c < n; ++c) {
        d.eigenvalues[c] = raw[idx[c]];
        for (int r = 0; r < n; ++r) d.eigenvectors(r, c) = v(r, idx[c]);
    }
    return d;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
    ComplexMatrix w = symmetrized(h);
    const int n = w.dim();
    jacobi(w, nullptr);
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = w(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

} // namespace qbsim
