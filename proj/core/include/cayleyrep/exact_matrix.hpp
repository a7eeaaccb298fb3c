#ifndef CAYLEYREP_EXACT_MATRIX_HPP
#define CAYLEYREP_EXACT_MATRIX_HPP

#include <vector>

#include "cayleyrep/rational.hpp"

namespace cayley {

/// Dense matrix over the Gaussian rationals, row-major.
struct ExactMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<GaussRat> entries;

  ExactMatrix() = default;
  ExactMatrix(int r, int c);

  static ExactMatrix identity(int n);
  /// Elementary matrix E_{ij} (zero-based indices).
  static ExactMatrix unit(int n, int i, int j);

  GaussRat& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
  const GaussRat& at(int r, int c) const {
    return entries[static_cast<size_t>(r) * cols + c];
  }

  bool is_zero() const;
  bool is_square() const { return rows == cols; }
  bool is_diagonal() const;
  GaussRat trace() const;
  ExactMatrix transpose() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const GaussRat& s);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(ExactMatrix a, const GaussRat& s) { return a *= s; }
  friend ExactMatrix operator*(const GaussRat& s, ExactMatrix a) { return a *= s; }
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
};

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace cayley

#endif
