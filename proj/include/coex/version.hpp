#ifndef COEX_VERSION_HPP
#define COEX_VERSION_HPP

namespace coex {

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace coex

#endif
