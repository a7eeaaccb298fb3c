#include "cayleyrep/exact_matrix.hpp"

#include <stdexcept>

namespace cayley {

namespace {
void require_same_shape(const ExactMatrix& a, const ExactMatrix& b, const char* op) {
  if (a.rows != b.rows || a.cols != b.cols) {
    throw std::invalid_argument(std::string("ExactMatrix: shape mismatch in ") + op);
  }
}
}  // namespace

ExactMatrix::ExactMatrix(int r, int c) : rows(r), cols(c) {
  if (r <= 0 || c <= 0) throw std::invalid_argument("ExactMatrix: nonpositive shape");
  entries.assign(static_cast<size_t>(r) * c, GaussRat{});
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = GaussRat::integer(1);
  return m;
}

ExactMatrix ExactMatrix::unit(int n, int i, int j) {
  ExactMatrix m(n, n);
  m.at(i, j) = GaussRat::integer(1);
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : entries) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool ExactMatrix::is_diagonal() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (i != j && !at(i, j).is_zero()) return false;
    }
  }
  return true;
}

GaussRat ExactMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("ExactMatrix: trace of non-square");
  GaussRat t;
  for (int i = 0; i < rows; ++i) t += at(i, i);
  return t;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  require_same_shape(*this, o, "+");
  for (size_t k = 0; k < entries.size(); ++k) entries[k] += o.entries[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  require_same_shape(*this, o, "-");
  for (size_t k = 0; k < entries.size(); ++k) entries[k] -= o.entries[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussRat& s) {
  for (auto& e : entries) e *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("ExactMatrix: shape mismatch in *");
  ExactMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      const GaussRat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols; ++j) {
        const GaussRat& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        c.at(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) {
  return a * b - b * a;
}

}  // namespace cayley
