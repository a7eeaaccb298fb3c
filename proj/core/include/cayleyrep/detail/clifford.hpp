#ifndef CAYLEYREP_DETAIL_CLIFFORD_HPP
#define CAYLEYREP_DETAIL_CLIFFORD_HPP

#include <vector>

#include "cayleyrep/exact_matrix.hpp"

namespace cayley::detail {

/// Pauli matrix (1, 2 or 3) over the Gaussian rationals.
ExactMatrix pauli(int which);

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

/// 2k anticommuting gamma matrices of Cl(2k) as iterated 2x2 tensor blocks,
/// entries in {0, +-1, +-i}: gamma_{2j-1} = s3^(j-1) x s1 x 1^(k-j) and the
/// s2 partner.
std::vector<ExactMatrix> gamma_matrices(int k);

}  // namespace cayley::detail

#endif
