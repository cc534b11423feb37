#ifndef SELFSIM_VERSION_HPP
#define SELFSIM_VERSION_HPP

namespace selfsim {

inline constexpr const char* kVersion = "0.1.0";

} // namespace selfsim

#endif
