#include "cayleyrep/power_span.hpp"

#include <stdexcept>

#include "cayleyrep/detail/rng.hpp"
#include "cayleyrep/exact_linalg.hpp"

namespace cayley {

SpanVerdict check_power_span(const MatrixRep& r) {
  const auto& basis = r.algebra_basis;
  SpanBasis span(basis);
  const int n = static_cast<int>(basis.size());
  SpanVerdict verdict;
  verdict.verdict = true;
  // abc + cba is symmetric under swapping (a, c), so i <= k covers all
  // triples; scanning (i, j, k) in order makes the first failure the
  // lexicographically smallest one.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ExactMatrix left = basis[i] * basis[j];   // B_i B_j
      ExactMatrix right = basis[j] * basis[i];  // B_j B_i
      for (int k = i; k < n; ++k) {
        ExactMatrix probe = left * basis[k] + basis[k] * right;
        if (!span.contains(probe)) {
          verdict.verdict = false;
          verdict.failing_triple = {i, j, k};
          verdict.residual_witness = std::move(probe);
          return verdict;
        }
      }
    }
  }
  return verdict;
}

bool check_odd_powers(const MatrixRep& r, int max_k, int samples, std::uint64_t seed) {
  if (max_k < 1 || samples < 1) {
    throw std::invalid_argument("check_odd_powers: max_k and samples must be >= 1");
  }
  SpanBasis span(r.algebra_basis);
  detail::SplitMix64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    ExactMatrix u(r.dim_v, r.dim_v);
    for (const auto& b : r.algebra_basis) {
      long c = rng.uniform_int(-2, 2);
      if (c != 0) u += GaussRat::integer(c) * b;
    }
    ExactMatrix u2 = u * u;
    ExactMatrix power = u;  // u^(2k+1), starting at k = 0
    for (int k = 1; k <= max_k; ++k) {
      power = power * u2;
      if (!span.contains(power)) return false;
    }
  }
  return true;
}

bool check_cartan_s3(const MatrixRep& r) {
  const auto cartan = r.cartan_basis();
  if (cartan.empty()) return true;  // nothing to close
  for (const auto& h : cartan) {
    if (!h.is_diagonal()) {
      throw std::invalid_argument("check_cartan_s3: Cartan basis must be diagonal");
    }
  }
  for (size_t i = 0; i < cartan.size(); ++i) {
    for (size_t j = i + 1; j < cartan.size(); ++j) {
      if (!commutator(cartan[i], cartan[j]).is_zero()) {
        throw std::invalid_argument("check_cartan_s3: Cartan basis must commute");
      }
    }
  }
  SpanBasis span(cartan);
  const size_t n = cartan.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i; j < n; ++j) {
      ExactMatrix hij = cartan[i] * cartan[j];
      for (size_t k = j; k < n; ++k) {
        if (!span.contains(hij * cartan[k])) return false;
      }
    }
  }
  return true;
}

}  // namespace cayley
