#ifndef CAYLEYREP_WEIGHT_DIAGRAM_HPP
#define CAYLEYREP_WEIGHT_DIAGRAM_HPP

#include <map>
#include <set>

#include "cayleyrep/root_system.hpp"

namespace cayley {

/// Weight diagram (support with multiplicities) of the irreducible
/// highest-weight representation.
struct WeightDiagram {
  Weight highest;
  std::map<Weight, int> mult;

  std::set<Weight> support() const;
  long long dimension() const;
  int multiplicity(const Weight& w) const;
};

/// Support of the irreducible representation with the given dominant highest
/// weight: the saturated set Conv(W.highest) intersected with the coset
/// highest + ZPhi. Computed by downward saturation over the simple roots with
/// an exact dominance test. Throws std::invalid_argument when highest is not
/// dominant (pointing at dominant_representative) or not a lattice weight.
std::set<Weight> weight_set(const Weight& highest, const RootSystemData& rs);

/// Independent brute-force realization of the same set: enumerate the coset
/// points inside the bounding box of the Weyl orbit and keep those passing
/// the exact convex-hull LP. Intended as a cross-check for weight_set.
std::set<Weight> hull_coset_oracle(const Weight& highest, const RootSystemData& rs);

/// dim V_target for the irreducible with the given highest weight; 0 when
/// target lies outside the support. Freudenthal recursion, exact rationals.
int freudenthal_multiplicity(const Weight& highest, const Weight& target,
                             const RootSystemData& rs);

WeightDiagram weight_diagram(const Weight& highest, const RootSystemData& rs);

/// Dominance test: lambda - mu is a nonnegative integer combination of the
/// simple roots.
bool dominated_by(const Weight& mu, const Weight& lambda, const RootSystemData& rs);

}  // namespace cayley

#endif
