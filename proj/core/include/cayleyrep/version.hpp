#ifndef CAYLEYREP_VERSION_HPP
#define CAYLEYREP_VERSION_HPP

namespace cayley {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cayley

#endif
