#ifndef QBSIM_VERSION_HPP
#define QBSIM_VERSION_HPP

namespace qbsim {

inline constexpr const char* kVersion = "0.1.0";

} // namespace qbsim

#endif
