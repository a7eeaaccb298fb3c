#ifndef CAYLEYREP_CLASSIFICATION_HPP
#define CAYLEYREP_CLASSIFICATION_HPP

#include <optional>
#include <string>

#include "cayleyrep/cayley_config.hpp"

namespace cayley {

struct ClassificationRow {
  Family family;
  int rank = 0;
  std::vector<long> coeffs;  ///< fundamental-weight coefficients
  Weight highest;            ///< same weight in L coordinates
  bool verdict = false;
  /// Canonical name; populated exactly for the verdict-true rows.
  std::optional<std::string> identification;
};

/// All nonzero dominant weights with fundamental coefficients in [0, bound],
/// lexicographic in the coefficient vector: (bound+1)^n - 1 candidates.
std::vector<Weight> enumerate_dominant(const RootSystemData& rs, int bound);

/// Runs the configuration criterion (screening evidence) over the candidate
/// window. Honors CAYLEY_REP_THREADS for parallel evaluation; the row order
/// is fixed regardless.
std::vector<ClassificationRow> classify(Family family, int rank, int bound);

/// classify over every supported system with rank <= max_rank, ordered
/// family -> rank -> lex(coefficients). Desk scale: max_rank <= 8, bound <= 3.
std::vector<ClassificationRow> full_report(int max_rank, int bound);

}  // namespace cayley

#endif
