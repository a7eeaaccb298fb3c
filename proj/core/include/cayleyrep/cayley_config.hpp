#ifndef CAYLEYREP_CAYLEY_CONFIG_HPP
#define CAYLEYREP_CAYLEY_CONFIG_HPP

#include <optional>

#include "cayleyrep/weight_diagram.hpp"

namespace cayley {

/// Evidence gathered while deciding the orbit-configuration criterion for a
/// dominant weight. verdict is true iff
///   orbit_size == 2 * rank_needed, orbit_rank == rank_needed,
///   the orbit is symmetric about the origin, and the representation support
///   adds at most the origin to the orbit.
struct ConfigReport {
  Weight highest;
  long long orbit_size = 0;
  int orbit_rank = 0;
  int rank_needed = 0;
  bool symmetric_about_origin = false;
  /// support(weight diagram) minus the orbit; expected subset of {0}.
  /// Evaluated in full mode, and in screening mode only once the cheaper
  /// checks pass (nullopt means the candidate already failed before it was
  /// needed).
  std::optional<std::set<Weight>> support_minus_orbit;
  bool verdict = false;
  std::optional<Weight> witness;
};

enum class ConfigEvidence {
  full,       ///< materialize orbit, rank and support unconditionally
  screening,  ///< short-circuit on the cheap combinatorial checks
};

/// Decides whether the weight diagram of the irreducible with this highest
/// weight is the Weyl orbit of the highest weight (possibly union the
/// origin), with full rank and size 2n. Throws std::invalid_argument for the
/// zero weight (trivial representation) or a non-dominant input.
ConfigReport is_cayley_configuration(const Weight& highest, const RootSystemData& rs,
                                     ConfigEvidence evidence = ConfigEvidence::full);

/// True iff there are rank_needed linearly independent weights w_1..w_n in
/// the support with support \ {0} contained in {+-w_1, ..., +-w_n}; an empty
/// nonzero support passes vacuously.
bool cartan_cube_closure(const std::set<Weight>& support, int rank_needed);

}  // namespace cayley

#endif
