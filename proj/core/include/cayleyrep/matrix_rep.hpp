#ifndef CAYLEYREP_MATRIX_REP_HPP
#define CAYLEYREP_MATRIX_REP_HPP

#include <optional>
#include <string>
#include <vector>

#include "cayleyrep/exact_matrix.hpp"
#include "cayleyrep/root_system.hpp"

namespace cayley {

/// Explicit matrix realization of a Lie algebra representation over the
/// Gaussian rationals, with a diagonal Cartan subalgebra.
///
/// cartan_indices points into algebra_basis; every indexed matrix is
/// diagonal. cartan_coords[i] gives the L-basis evaluation vector of the i-th
/// Cartan element, so that for every diagonal slot s
///   cartan[i](s,s) == dot(weight_labels[s], cartan_coords[i]).
struct MatrixRep {
  std::string label;
  int dim_v = 0;
  std::vector<ExactMatrix> algebra_basis;
  std::vector<int> cartan_indices;
  std::vector<Weight> cartan_coords;
  std::vector<Weight> weight_labels;

  /// Root-system identity, present for the semisimple catalog entries.
  std::optional<Family> family;
  std::optional<int> rank;
  std::optional<Weight> highest;

  std::vector<ExactMatrix> cartan_basis() const;
  size_t algebra_dim() const { return algebra_basis.size(); }
};

/// S^d of the sl2 standard representation: H = diag(d, d-2, ..., -d) with the
/// standard raising/lowering pair. Throws for d < 1.
MatrixRep build_sl2_symmetric_power(int d);

/// Split-form standard representation of so_{2n+1} (B), sp_{2n} (C) or
/// so_{2n} (D), with the bilinear form anti-diagonal so the Cartan is
/// diagonal: diag(a_1..a_n, [0,] -a_n..-a_1).
MatrixRep build_quadratic_standard(Family family, int rank);

/// 6-dimensional action of sl4 on the wedge basis e_i ^ e_j.
MatrixRep build_sl4_lambda2();

enum class Chirality { plus, minus };

/// Spin representations through gamma matrices built from iterated 2x2
/// tensor blocks (entries in {0, +-1, +-i}); generators (1/4)[g_a, g_b].
/// Supported inputs: (B,2) and (D,4) with a chirality; the D4 half-spin
/// blocks are the eigenblocks of the chirality operator g9 = g1...g8, plus
/// meaning the +1 block. Only the sign-parity classes are contract.
MatrixRep build_spin(Family family, int rank, Chirality chi = Chirality::plus);

/// Abelian algebra of all diagonal matrices; non-semisimple fixture.
MatrixRep build_diagonal_group_algebra(int n);

/// Strictly upper triangular matrices; nilpotent fixture.
MatrixRep build_unipotent_upper(int n);

/// Block-diagonal sum of two realizations of the same algebra (paired basis
/// order, identical structure constants). Throws std::invalid_argument on a
/// structure-constant mismatch.
MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b);

/// Multiset of weights read off the simultaneous Cartan diagonal. Throws when
/// the realization has no diagonal Cartan to read.
std::vector<Weight> weights_of_rep(const MatrixRep& r);

/// Label registry: "sl2-sym-3", "sl2-adjoint", "soN-standard:B2",
/// "sp2n-standard:C3", "sl4-lambda2", "spin-so5", "spin8-plus",
/// "spin8-minus", "gl-diagonal[:n]", "unipotent-upper[:n]".
/// Throws std::invalid_argument listing catalog_labels() on unknown labels.
MatrixRep build_rep(const std::string& label);

/// Canonical catalog labels (the parametric families listed at their default
/// or classification-relevant sizes).
std::vector<std::string> catalog_labels();

}  // namespace cayley

#endif
