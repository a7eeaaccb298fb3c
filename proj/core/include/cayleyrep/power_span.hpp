#ifndef CAYLEYREP_POWER_SPAN_HPP
#define CAYLEYREP_POWER_SPAN_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "cayleyrep/matrix_rep.hpp"

namespace cayley {

/// Outcome of the triple-product closure test. When false, failing_triple is
/// the lexicographically smallest (i,j,k) of basis indices with
/// B_i B_j B_k + B_k B_j B_i outside the span, and residual_witness is that
/// product (exactly not in the span).
struct SpanVerdict {
  bool verdict = false;
  std::optional<std::array<int, 3>> failing_triple;
  std::optional<ExactMatrix> residual_witness;
};

/// Tests B_i B_j B_k + B_k B_j B_i in span(algebra_basis) for all basis
/// triples, exactly. By trilinearity this decides the closure for the whole
/// algebra, hence the power-span property of the realized subalgebra.
SpanVerdict check_power_span(const MatrixRep& r);

/// Probabilistic necessary check: u^(2k+1) in span for k <= max_k, for
/// `samples` pseudo-random small-integer combinations u of the basis.
/// Coefficients are drawn from {-2,...,2} by a documented splitmix64 stream
/// seeded with `seed`, so runs are reproducible.
bool check_odd_powers(const MatrixRep& r, int max_k, int samples, std::uint64_t seed);

/// Tests H_i H_j H_k in span(cartan_basis) for all Cartan triples (the
/// symmetrization is trivial for commuting diagonals). Throws
/// std::invalid_argument when the Cartan basis is not diagonal/commuting.
bool check_cartan_s3(const MatrixRep& r);

}  // namespace cayley

#endif
