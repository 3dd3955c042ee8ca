#ifndef QBSIM_MATRIX_HPP
#define QBSIM_MATRIX_HPP

#include <complex>
#include <vector>

namespace qbsim {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major. The universal carrier for
// operators and density matrices; dimensions here stay small (<= ~200),
// so everything is stored dense and copied by value.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim);

    static ComplexMatrix identity(int dim);

    int dim() const noexcept { return dim_; }
    bool empty() const noexcept { return dim_ == 0; }

    Complex& operator()(int i, int j) noexcept { return a_[static_cast<size_t>(i) * dim_ + j]; }
    const Complex& operator()(int i, int j) const noexcept { return a_[static_cast<size_t>(i) * dim_ + j]; }

    Complex* row(int i) noexcept { return a_.data() + static_cast<size_t>(i) * dim_; }
    const Complex* row(int i) const noexcept { return a_.data() + static_cast<size_t>(i) * dim_; }

    Complex* data() noexcept { return a_.data(); }
    const Complex* data() const noexcept { return a_.data(); }
    size_t size() const noexcept { return a_.size(); }

    ComplexMatrix adjoint() const;

    double max_abs() const;
    // max entry of |a - a^dagger|
    double hermiticity_defect() const;
    double frobenius_norm() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

private:
    int dim_ = 0;
    std::vector<Complex> a_;
};

// c = a * b. Throws std::invalid_argument on dimension mismatch.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

// ab - ba
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// ab + ba
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

Complex trace(const ComplexMatrix& a);

// Re Tr(op * rho) for Hermitian op and a density matrix rho. The imaginary
// part must stay below 1e-10; beyond that the state is considered corrupted
// and a NumericalError is thrown.
double expectation(const ComplexMatrix& op, const ComplexMatrix& rho);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace qbsim

#endif
