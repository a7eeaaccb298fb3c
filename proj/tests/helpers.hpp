#ifndef CAYLEYREP_TESTS_HELPERS_HPP
#define CAYLEYREP_TESTS_HELPERS_HPP

#include "cayleyrep/root_system.hpp"

namespace cayley::testing {

inline Weight W(const char* csv) { return parse_weight(csv); }

inline RootSystemData RS(Family f, int rank) { return build_root_system(f, rank); }

}  // namespace cayley::testing

#endif
