#include "cayleyrep/exact_linalg.hpp"

#include <stdexcept>

namespace cayley {

int rank(const ExactMatrix& m) {
  std::vector<std::vector<GaussRat>> work(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    work[i].assign(m.entries.begin() + static_cast<size_t>(i) * m.cols,
                   m.entries.begin() + static_cast<size_t>(i + 1) * m.cols);
  }
  int r = 0;
  for (int col = 0; col < m.cols && r < m.rows; ++col) {
    int pivot = -1;
    for (int i = r; i < m.rows; ++i) {
      if (!work[i][col].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(work[r], work[pivot]);
    for (int i = r + 1; i < m.rows; ++i) {
      if (work[i][col].is_zero()) continue;
      GaussRat f = work[i][col] / work[r][col];
      for (int j = col; j < m.cols; ++j) work[i][j] -= f * work[r][j];
    }
    ++r;
  }
  return r;
}

SpanBasis::SpanBasis(const std::vector<ExactMatrix>& basis) {
  for (const auto& m : basis) add(m);
}

bool SpanBasis::add(const ExactMatrix& m) {
  if (generators_ == 0) {
    mat_rows_ = m.rows;
    mat_cols_ = m.cols;
  } else if (m.rows != mat_rows_ || m.cols != mat_cols_) {
    throw std::invalid_argument("SpanBasis: generator shape mismatch");
  }
  const size_t idx = generators_++;
  for (auto& row : rows_) row.comb.emplace_back();

  std::vector<GaussRat> comb(generators_);
  comb[idx] = GaussRat::integer(1);
  std::vector<GaussRat> vec = m.entries;
  for (const auto& row : rows_) {
    const GaussRat factor = vec[row.pivot];
    if (factor.is_zero()) continue;
    for (size_t j = row.pivot; j < vec.size(); ++j) vec[j] -= factor * row.vec[j];
    for (size_t j = 0; j < comb.size(); ++j) comb[j] -= factor * row.comb[j];
  }
  size_t pivot = 0;
  while (pivot < vec.size() && vec[pivot].is_zero()) ++pivot;
  if (pivot == vec.size()) return false;

  GaussRat lead = vec[pivot];
  for (auto& v : vec) v /= lead;
  for (auto& c : comb) c /= lead;
  EchelonRow row{std::move(vec), std::move(comb), pivot};
  auto pos = rows_.begin();
  while (pos != rows_.end() && pos->pivot < pivot) ++pos;
  rows_.insert(pos, std::move(row));
  return true;
}

std::vector<GaussRat> SpanBasis::reduce(const ExactMatrix& x,
                                        std::vector<GaussRat>* comb_out) const {
  if (generators_ == 0) throw std::invalid_argument("SpanBasis: empty basis");
  if (x.rows != mat_rows_ || x.cols != mat_cols_) {
    throw std::invalid_argument("SpanBasis: candidate shape mismatch");
  }
  std::vector<GaussRat> vec = x.entries;
  if (comb_out) comb_out->assign(generators_, GaussRat{});
  for (const auto& row : rows_) {
    const GaussRat f = vec[row.pivot];
    if (f.is_zero()) continue;
    for (size_t j = row.pivot; j < vec.size(); ++j) vec[j] -= f * row.vec[j];
    if (comb_out) {
      for (size_t j = 0; j < comb_out->size(); ++j) {
        (*comb_out)[j] += f * row.comb[j];
      }
    }
  }
  return vec;
}

bool SpanBasis::contains(const ExactMatrix& x) const {
  auto residual = reduce(x, nullptr);
  for (const auto& v : residual) {
    if (!v.is_zero()) return false;
  }
  return true;
}

std::optional<std::vector<GaussRat>> SpanBasis::coefficients(
    const ExactMatrix& x) const {
  std::vector<GaussRat> comb;
  auto residual = reduce(x, &comb);
  for (const auto& v : residual) {
    if (!v.is_zero()) return std::nullopt;
  }
  return comb;
}

SpanMembership span_membership(const ExactMatrix& x,
                               const std::vector<ExactMatrix>& basis) {
  if (basis.empty()) throw std::invalid_argument("span_membership: empty basis");
  SpanBasis span(basis);
  SpanMembership out;
  if (auto c = span.coefficients(x)) {
    out.member = true;
    out.coefficients = std::move(*c);
  }
  return out;
}

namespace {

// Phase-1 tableau simplex, all-rational, Bland's rule. Minimizes the sum of
// artificial variables for {A x = b, x >= 0}; feasible iff the optimum is 0.
bool simplex_phase1_feasible(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  const size_t m = a.size();
  const size_t n = a.empty() ? 0 : a[0].size();
  for (size_t i = 0; i < m; ++i) {
    if (sgn(b[i]) < 0) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
    }
  }
  // Columns: n structural, m artificial, then RHS.
  const size_t width = n + m + 1;
  std::vector<std::vector<Rat>> t(m + 1, std::vector<Rat>(width));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = b[i];
  }
  // Reduced-cost row z_j - c_j for phase-1 costs (artificials cost 1).
  for (size_t j = 0; j < width; ++j) {
    Rat s;
    for (size_t i = 0; i < m; ++i) s += t[i][j];
    if (j >= n && j < n + m) s -= 1;
    t[m][j] = s;
  }
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    size_t enter = width - 1;
    for (size_t j = 0; j + 1 < width; ++j) {
      if (sgn(t[m][j]) > 0) {
        enter = j;
        break;
      }
    }
    if (enter == width - 1) break;
    size_t leave = m;
    Rat best;
    for (size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rat ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded; cannot happen in phase 1
    Rat piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (size_t i = 0; i <= m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      Rat f = t[i][enter];
      for (size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  return sgn(t[m][width - 1]) == 0;
}

}  // namespace

bool lp_feasible_convex_combination(const std::vector<Rat>& p,
                                    const std::vector<std::vector<Rat>>& points) {
  if (points.empty()) {
    throw std::invalid_argument("lp_feasible_convex_combination: no points");
  }
  const size_t d = p.size();
  for (const auto& pt : points) {
    if (pt.size() != d) {
      throw std::invalid_argument("lp_feasible_convex_combination: length mismatch");
    }
  }
  const size_t n = points.size();
  std::vector<std::vector<Rat>> a(d + 1, std::vector<Rat>(n));
  std::vector<Rat> b(d + 1);
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = points[j][i];
    b[i] = p[i];
  }
  for (size_t j = 0; j < n; ++j) a[d][j] = 1;
  b[d] = 1;
  return simplex_phase1_feasible(std::move(a), std::move(b));
}

}  // namespace cayley
