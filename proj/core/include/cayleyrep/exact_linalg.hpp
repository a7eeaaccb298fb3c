#ifndef CAYLEYREP_EXACT_LINALG_HPP
#define CAYLEYREP_EXACT_LINALG_HPP

#include <optional>
#include <vector>

#include "cayleyrep/exact_matrix.hpp"

namespace cayley {

/// Exact rank over the Gaussian rationals (equals the rank over any
/// characteristic-zero field).
int rank(const ExactMatrix& m);

/// Row-echelon span of a family of equally-shaped matrices, with coefficient
/// bookkeeping. Build once, query membership many times.
class SpanBasis {
 public:
  SpanBasis() = default;
  explicit SpanBasis(const std::vector<ExactMatrix>& basis);

  /// Adds one generator; returns true if it enlarged the span.
  bool add(const ExactMatrix& m);

  int dimension() const { return static_cast<int>(rows_.size()); }
  size_t generators() const { return generators_; }

  bool contains(const ExactMatrix& x) const;
  /// Coefficients c with x == sum c_i * basis_i, or nullopt when x is outside
  /// the span. The combination reproduces x bit-exactly.
  std::optional<std::vector<GaussRat>> coefficients(const ExactMatrix& x) const;

 private:
  struct EchelonRow {
    std::vector<GaussRat> vec;   // leading entry 1 at `pivot`
    std::vector<GaussRat> comb;  // expression in the original generators
    size_t pivot = 0;
  };
  std::vector<GaussRat> reduce(const ExactMatrix& x,
                               std::vector<GaussRat>* comb_out) const;

  std::vector<EchelonRow> rows_;  // sorted by pivot column
  size_t generators_ = 0;
  int mat_rows_ = 0;
  int mat_cols_ = 0;
};

struct SpanMembership {
  bool member = false;
  std::vector<GaussRat> coefficients;  // populated when member
};

/// Exact span-membership test; throws std::invalid_argument on shape mismatch
/// or empty basis.
SpanMembership span_membership(const ExactMatrix& x,
                               const std::vector<ExactMatrix>& basis);

/// Decides exactly whether p lies in the convex hull of `points`
/// (exists lambda >= 0, sum lambda = 1, sum lambda_i points_i = p),
/// by phase-1 simplex over the rationals with Bland's rule.
/// Throws std::invalid_argument on empty point list or length mismatch.
bool lp_feasible_convex_combination(const std::vector<Rat>& p,
                                    const std::vector<std::vector<Rat>>& points);

}  // namespace cayley

#endif
