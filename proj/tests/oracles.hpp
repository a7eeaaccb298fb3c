#ifndef CAYLEYREP_TESTS_ORACLES_HPP
#define CAYLEYREP_TESTS_ORACLES_HPP

// Test-only oracles, deliberately independent of the library code paths they
// cross-check.

#include "cayleyrep/exact_matrix.hpp"
#include "cayleyrep/root_system.hpp"

namespace cayley::testing {

/// Rank by fraction-free Bareiss elimination over the Gaussian integers
/// (denominators cleared first). Independent of exact_linalg::rank.
int bareiss_rank(const ExactMatrix& m);

/// Weyl dimension formula prod (lambda+delta, alpha) / (delta, alpha), exact.
Int weyl_dimension(const Weight& highest, const RootSystemData& rs);

/// Exact 2-D convex-hull membership by orientation tests (gift wrapping).
bool hull2d_member(const std::vector<Rat>& p,
                   const std::vector<std::vector<Rat>>& points);

}  // namespace cayley::testing

#endif
