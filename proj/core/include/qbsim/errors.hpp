#ifndef QBSIM_ERRORS_HPP
#define QBSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qbsim {

// Bad run configuration (unknown key, type mismatch, out-of-range parameter).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure during integration or diagonalization (trace drift,
// positivity breach, Fock-space truncation overflow, no convergence).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem failure while emitting results.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qbsim

#endif
