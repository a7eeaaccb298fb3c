#include "cayleyrep/matrix_rep.hpp"

#include <algorithm>
#include <stdexcept>

#include "cayleyrep/detail/clifford.hpp"
#include "cayleyrep/exact_linalg.hpp"

namespace cayley {

namespace detail {

ExactMatrix pauli(int which) {
  ExactMatrix m(2, 2);
  switch (which) {
    case 1:
      m.at(0, 1) = GaussRat::integer(1);
      m.at(1, 0) = GaussRat::integer(1);
      break;
    case 2:
      m.at(0, 1) = GaussRat(make_rat(0), make_rat(-1));
      m.at(1, 0) = GaussRat::imaginary_unit();
      break;
    case 3:
      m.at(0, 0) = GaussRat::integer(1);
      m.at(1, 1) = GaussRat::integer(-1);
      break;
    default:
      throw std::logic_error("pauli: bad index");
  }
  return m;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix m(a.rows * b.rows, a.cols * b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows; ++k) {
        for (int l = 0; l < b.cols; ++l) {
          if (b.at(k, l).is_zero()) continue;
          m.at(i * b.rows + k, j * b.cols + l) = a.at(i, j) * b.at(k, l);
        }
      }
    }
  }
  return m;
}

std::vector<ExactMatrix> gamma_matrices(int k) {
  std::vector<ExactMatrix> gammas;
  for (int j = 1; j <= k; ++j) {
    for (int which : {1, 2}) {
      ExactMatrix g = ExactMatrix::identity(1);
      for (int pos = 1; pos <= k; ++pos) {
        if (pos < j) {
          g = kron(g, pauli(3));
        } else if (pos == j) {
          g = kron(g, pauli(which));
        } else {
          g = kron(g, ExactMatrix::identity(2));
        }
      }
      gammas.push_back(std::move(g));
    }
  }
  return gammas;
}

}  // namespace detail

std::vector<ExactMatrix> MatrixRep::cartan_basis() const {
  std::vector<ExactMatrix> out;
  out.reserve(cartan_indices.size());
  for (int i : cartan_indices) out.push_back(algebra_basis[i]);
  return out;
}

namespace {

using detail::gamma_matrices;
using detail::kron;
using detail::pauli;

const Rat kHalf = make_rat(1, 2);

Weight basis_weight(int dim, int i, long num = 1, long den = 1) {
  Weight w = Weight::zero(dim);
  w.coords[i] = make_rat(num, den);
  return w;
}

}  // namespace

MatrixRep build_sl2_symmetric_power(int d) {
  if (d < 1) throw std::invalid_argument("build_sl2_symmetric_power: d must be >= 1");
  const int n = d + 1;
  ExactMatrix h(n, n), e(n, n), f(n, n);
  for (int k = 0; k < n; ++k) h.at(k, k) = GaussRat::integer(d - 2 * k);
  for (int j = 0; j + 1 < n; ++j) {
    e.at(j, j + 1) = GaussRat::integer(d - j);
    f.at(j + 1, j) = GaussRat::integer(j + 1);
  }
  MatrixRep rep;
  rep.label = "sl2-sym-" + std::to_string(d);
  rep.dim_v = n;
  rep.algebra_basis = {std::move(h), std::move(e), std::move(f)};
  rep.cartan_indices = {0};
  Weight hc = Weight::zero(2);
  hc.coords[0] = 1;
  hc.coords[1] = -1;
  rep.cartan_coords = {hc};
  for (int k = 0; k < n; ++k) {
    Weight w = Weight::zero(2);
    w.coords[0] = make_rat(d - 2 * k, 2);
    w.coords[1] = -w.coords[0];
    rep.weight_labels.push_back(w);
  }
  rep.family = Family::A;
  rep.rank = 1;
  rep.highest = rep.weight_labels.front();
  return rep;
}

MatrixRep build_quadratic_standard(Family family, int rank) {
  if (family == Family::A) {
    throw std::invalid_argument("build_quadratic_standard: expects family B, C or D");
  }
  if ((family == Family::B && rank < 2) || (family == Family::C && rank < 3) ||
      (family == Family::D && rank < 4)) {
    throw std::invalid_argument("build_quadratic_standard: rank below Table-1 range for " +
                                std::string(1, family_letter(family)) +
                                std::to_string(rank));
  }
  const int n = rank;
  const int dim = (family == Family::B) ? 2 * n + 1 : 2 * n;
  // Defining condition against the anti-diagonal form: X_{ij} = s_{ij} X_{i'j'}
  // with (i',j') = (dim-1-j, dim-1-i); s = -1 for so, -(eps_i eps_j) for sp.
  auto sign_of = [&](int i, int j) -> int {
    if (family != Family::C) return -1;
    int ei = (i < n) ? 1 : -1;
    int ej = (j < n) ? 1 : -1;
    return -ei * ej;
  };

  MatrixRep rep;
  rep.dim_v = dim;
  // Cartan pairs first: H_k = E_kk - E_{dim-1-k,dim-1-k}.
  for (int k = 0; k < n; ++k) {
    ExactMatrix h(dim, dim);
    h.at(k, k) = GaussRat::integer(1);
    h.at(dim - 1 - k, dim - 1 - k) = GaussRat::integer(-1);
    rep.algebra_basis.push_back(std::move(h));
    rep.cartan_indices.push_back(k);
    rep.cartan_coords.push_back(basis_weight(n, k));
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const int ip = dim - 1 - j;
      const int jp = dim - 1 - i;
      if (i == ip && j == jp) {  // anti-diagonal entry
        if (sign_of(i, j) == 1) {
          rep.algebra_basis.push_back(ExactMatrix::unit(dim, i, j));
        }
        continue;
      }
      if (std::make_pair(i, j) > std::make_pair(ip, jp)) continue;  // one per pair
      if (i == j && ip == jp) continue;  // already placed as a Cartan element
      ExactMatrix m(dim, dim);
      m.at(i, j) = GaussRat::integer(1);
      m.at(ip, jp) = GaussRat::integer(sign_of(i, j));
      rep.algebra_basis.push_back(std::move(m));
    }
  }

  for (int s = 0; s < dim; ++s) {
    if (s < n) {
      rep.weight_labels.push_back(basis_weight(n, s));
    } else if (family == Family::B && s == n) {
      rep.weight_labels.push_back(Weight::zero(n));
    } else {
      rep.weight_labels.push_back(basis_weight(n, dim - 1 - s, -1));
    }
  }
  rep.family = family;
  rep.rank = n;
  rep.highest = basis_weight(n, 0);
  rep.label = (family == Family::C ? "sp2n-standard:" : "soN-standard:") +
              std::string(1, family_letter(family)) + std::to_string(n);
  return rep;
}

namespace {

/// Second exterior power of a 4x4 matrix on the ordered wedge basis
/// e0^e1, e0^e2, e0^e3, e1^e2, e1^e3, e2^e3.
ExactMatrix lambda2_of(const ExactMatrix& x) {
  static const std::pair<int, int> pairs[6] = {{0, 1}, {0, 2}, {0, 3},
                                               {1, 2}, {1, 3}, {2, 3}};
  auto pair_index = [](int a, int b) {
    for (int p = 0; p < 6; ++p) {
      if (pairs[p].first == a && pairs[p].second == b) return p;
    }
    throw std::logic_error("lambda2_of: bad pair");
  };
  ExactMatrix out(6, 6);
  for (int p = 0; p < 6; ++p) {
    const auto [a, b] = pairs[p];
    // x.(e_a ^ e_b) = (x e_a) ^ e_b + e_a ^ (x e_b)
    for (int i = 0; i < 4; ++i) {
      const GaussRat& xia = x.at(i, a);
      if (!xia.is_zero() && i != b) {
        if (i < b) {
          out.at(pair_index(i, b), p) += xia;
        } else {
          out.at(pair_index(b, i), p) -= xia;
        }
      }
      const GaussRat& xib = x.at(i, b);
      if (!xib.is_zero() && i != a) {
        if (a < i) {
          out.at(pair_index(a, i), p) += xib;
        } else {
          out.at(pair_index(i, a), p) -= xib;
        }
      }
    }
  }
  return out;
}

}  // namespace

MatrixRep build_sl4_lambda2() {
  std::vector<ExactMatrix> sl4;
  for (int k = 0; k < 3; ++k) {
    ExactMatrix h(4, 4);
    h.at(k, k) = GaussRat::integer(1);
    h.at(k + 1, k + 1) = GaussRat::integer(-1);
    sl4.push_back(std::move(h));
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j) sl4.push_back(ExactMatrix::unit(4, i, j));
    }
  }

  MatrixRep rep;
  rep.label = "sl4-lambda2";
  rep.dim_v = 6;
  for (const auto& x : sl4) rep.algebra_basis.push_back(lambda2_of(x));
  rep.cartan_indices = {0, 1, 2};
  for (int k = 0; k < 3; ++k) {
    Weight c = Weight::zero(4);
    c.coords[k] = 1;
    c.coords[k + 1] = -1;
    rep.cartan_coords.push_back(c);
  }
  static const std::pair<int, int> pairs[6] = {{0, 1}, {0, 2}, {0, 3},
                                               {1, 2}, {1, 3}, {2, 3}};
  for (const auto& [a, b] : pairs) {
    Weight w(std::vector<Rat>(4, -kHalf));
    w.coords[a] = kHalf;
    w.coords[b] = kHalf;
    rep.weight_labels.push_back(w);
  }
  rep.family = Family::A;
  rep.rank = 3;
  rep.highest = rep.weight_labels.front();
  return rep;
}

MatrixRep build_spin(Family family, int rank, Chirality chi) {
  const bool so5 = (family == Family::B && rank == 2);
  const bool so8 = (family == Family::D && rank == 4);
  if (!so5 && !so8) {
    throw std::invalid_argument(
        "build_spin: supported inputs are (B,2) and (D,4,plus|minus)");
  }

  std::vector<ExactMatrix> gammas;
  int n_gamma = 0;
  if (so5) {
    gammas = gamma_matrices(2);
    gammas.push_back(kron(pauli(3), pauli(3)));  // odd gamma closing Cl(5)
    n_gamma = 5;
  } else {
    gammas = gamma_matrices(4);
    n_gamma = 8;
  }
  const int full_dim = gammas.front().rows;

  std::vector<int> slots;
  if (so5) {
    slots.resize(full_dim);
    for (int s = 0; s < full_dim; ++s) slots[s] = s;
  } else {
    // Chirality operator g9 = g1...g8 = s3 x s3 x s3 x s3; keep its +1 or -1
    // eigenblock.
    ExactMatrix g9 = ExactMatrix::identity(1);
    for (int pos = 0; pos < 4; ++pos) g9 = kron(g9, pauli(3));
    const GaussRat want = GaussRat::integer(chi == Chirality::plus ? 1 : -1);
    for (int s = 0; s < full_dim; ++s) {
      if (g9.at(s, s) == want) slots.push_back(s);
    }
  }
  const int dim = static_cast<int>(slots.size());

  auto restrict_to_block = [&](const ExactMatrix& m) {
    ExactMatrix out(dim, dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) out.at(i, j) = m.at(slots[i], slots[j]);
    }
    // Generators are even in the gammas, hence block-diagonal; anything
    // leaking outside the block means a construction bug.
    if (!so5) {
      for (int i = 0; i < full_dim; ++i) {
        for (int j = 0; j < full_dim; ++j) {
          bool i_in = std::find(slots.begin(), slots.end(), i) != slots.end();
          bool j_in = std::find(slots.begin(), slots.end(), j) != slots.end();
          if (i_in != j_in && !m.at(i, j).is_zero()) {
            throw std::logic_error("build_spin: generator leaks across chirality blocks");
          }
        }
      }
    }
    return out;
  };

  MatrixRep rep;
  rep.dim_v = dim;
  const int n = rank;
  const GaussRat minus_half_i(make_rat(0), make_rat(-1, 2));
  for (int j = 0; j < n; ++j) {
    ExactMatrix h = minus_half_i * (gammas[2 * j] * gammas[2 * j + 1]);
    rep.algebra_basis.push_back(restrict_to_block(h));
    rep.cartan_indices.push_back(j);
    rep.cartan_coords.push_back(basis_weight(n, j));
  }
  const GaussRat half(kHalf);
  for (int a = 0; a < n_gamma; ++a) {
    for (int b = a + 1; b < n_gamma; ++b) {
      if (b == a + 1 && a % 2 == 0 && a / 2 < n) continue;  // Cartan pair
      rep.algebra_basis.push_back(restrict_to_block(half * (gammas[a] * gammas[b])));
    }
  }

  for (int i = 0; i < dim; ++i) {
    Weight w = Weight::zero(n);
    for (int j = 0; j < n; ++j) {
      const GaussRat& e = rep.algebra_basis[j].at(i, i);
      if (sgn(e.im) != 0) throw std::logic_error("build_spin: non-real Cartan diagonal");
      w.coords[j] = e.re;
    }
    rep.weight_labels.push_back(w);
  }
  rep.family = family;
  rep.rank = n;
  if (so5) {
    rep.label = "spin-so5";
    rep.highest = Weight(std::vector<Rat>{kHalf, kHalf});
  } else if (chi == Chirality::plus) {
    rep.label = "spin8-plus";
    rep.highest = Weight(std::vector<Rat>{kHalf, kHalf, kHalf, kHalf});
  } else {
    rep.label = "spin8-minus";
    rep.highest = Weight(std::vector<Rat>{kHalf, kHalf, kHalf, -kHalf});
  }
  return rep;
}

MatrixRep build_diagonal_group_algebra(int n) {
  if (n < 2) throw std::invalid_argument("build_diagonal_group_algebra: n must be >= 2");
  MatrixRep rep;
  rep.label = "gl-diagonal:" + std::to_string(n);
  rep.dim_v = n;
  for (int k = 0; k < n; ++k) {
    rep.algebra_basis.push_back(ExactMatrix::unit(n, k, k));
    rep.cartan_indices.push_back(k);
    rep.cartan_coords.push_back(basis_weight(n, k));
    rep.weight_labels.push_back(basis_weight(n, k));
  }
  return rep;
}

MatrixRep build_unipotent_upper(int n) {
  if (n < 2) throw std::invalid_argument("build_unipotent_upper: n must be >= 2");
  MatrixRep rep;
  rep.label = "unipotent-upper:" + std::to_string(n);
  rep.dim_v = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      rep.algebra_basis.push_back(ExactMatrix::unit(n, i, j));
    }
  }
  return rep;
}

namespace {

std::vector<std::vector<GaussRat>> structure_constants(const MatrixRep& r) {
  SpanBasis span(r.algebra_basis);
  std::vector<std::vector<GaussRat>> table;
  table.reserve(r.algebra_basis.size() * r.algebra_basis.size());
  for (const auto& a : r.algebra_basis) {
    for (const auto& b : r.algebra_basis) {
      auto coeffs = span.coefficients(commutator(a, b));
      if (!coeffs) {
        throw std::invalid_argument("direct_sum: algebra basis not commutator-closed");
      }
      table.push_back(std::move(*coeffs));
    }
  }
  return table;
}

ExactMatrix block_diag(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix m(a.rows + b.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
  }
  for (int i = 0; i < b.rows; ++i) {
    for (int j = 0; j < b.cols; ++j) m.at(a.rows + i, a.cols + j) = b.at(i, j);
  }
  return m;
}

}  // namespace

MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b) {
  if (a.algebra_basis.size() != b.algebra_basis.size() ||
      a.cartan_indices != b.cartan_indices || a.cartan_coords != b.cartan_coords) {
    throw std::invalid_argument("direct_sum: summands realize different algebras");
  }
  if (structure_constants(a) != structure_constants(b)) {
    throw std::invalid_argument("direct_sum: structure constants differ");
  }
  MatrixRep rep;
  rep.label = a.label + "+" + b.label;
  rep.dim_v = a.dim_v + b.dim_v;
  for (size_t i = 0; i < a.algebra_basis.size(); ++i) {
    rep.algebra_basis.push_back(block_diag(a.algebra_basis[i], b.algebra_basis[i]));
  }
  rep.cartan_indices = a.cartan_indices;
  rep.cartan_coords = a.cartan_coords;
  rep.weight_labels = a.weight_labels;
  rep.weight_labels.insert(rep.weight_labels.end(), b.weight_labels.begin(),
                           b.weight_labels.end());
  if (a.family == b.family && a.rank == b.rank) {
    rep.family = a.family;
    rep.rank = a.rank;
  }
  return rep;
}

std::vector<Weight> weights_of_rep(const MatrixRep& r) {
  if (r.cartan_indices.empty()) {
    throw std::invalid_argument("weights_of_rep: realization has no Cartan subalgebra");
  }
  const auto cartan = r.cartan_basis();
  for (const auto& h : cartan) {
    if (!h.is_diagonal()) {
      throw std::invalid_argument("weights_of_rep: Cartan basis is not diagonal");
    }
  }
  const int n = static_cast<int>(cartan.size());
  const int ambient = r.cartan_coords.front().dim();
  const bool zero_sum = (ambient == n + 1);  // type-A quotient convention

  std::vector<Weight> out;
  out.reserve(r.dim_v);
  for (int s = 0; s < r.dim_v; ++s) {
    // Solve dot(w, cartan_coords[i]) == cartan[i](s,s) for w, with the
    // zero-sum row appended in the type-A case.
    const int rows = n + (zero_sum ? 1 : 0);
    std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(ambient + 1));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < ambient; ++j) t[i][j] = r.cartan_coords[i].coords[j];
      const GaussRat& e = cartan[i].at(s, s);
      if (sgn(e.im) != 0) {
        throw std::invalid_argument("weights_of_rep: non-real Cartan eigenvalue");
      }
      t[i][ambient] = e.re;
    }
    if (zero_sum) {
      for (int j = 0; j < ambient; ++j) t[n][j] = 1;
    }
    // Exact Gauss-Jordan; the system is square after the zero-sum row.
    int rank_rows = 0;
    std::vector<int> pivot_row(ambient, -1);
    for (int col = 0; col < ambient && rank_rows < rows; ++col) {
      int piv = -1;
      for (int i = rank_rows; i < rows; ++i) {
        if (sgn(t[i][col]) != 0) {
          piv = i;
          break;
        }
      }
      if (piv < 0) continue;
      std::swap(t[rank_rows], t[piv]);
      for (int i = 0; i < rows; ++i) {
        if (i == rank_rows || sgn(t[i][col]) == 0) continue;
        Rat f = t[i][col] / t[rank_rows][col];
        for (int j = col; j <= ambient; ++j) t[i][j] -= f * t[rank_rows][j];
      }
      pivot_row[col] = rank_rows;
      ++rank_rows;
    }
    Weight w = Weight::zero(ambient);
    for (int col = 0; col < ambient; ++col) {
      if (pivot_row[col] < 0) {
        throw std::invalid_argument("weights_of_rep: Cartan evaluation map is singular");
      }
      w.coords[col] = t[pivot_row[col]][ambient] / t[pivot_row[col]][col];
    }
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

int parse_size_suffix(const std::string& label, const std::string& prefix,
                      int default_n) {
  if (label == prefix) return default_n;
  std::string rest = label.substr(prefix.size());
  if (rest.empty() || rest[0] != ':') {
    throw std::invalid_argument("build_rep: malformed label '" + label + "'");
  }
  return std::stoi(rest.substr(1));
}

MatrixRep build_single(const std::string& label) {
  if (label.rfind("sl2-sym-", 0) == 0) {
    return build_sl2_symmetric_power(std::stoi(label.substr(8)));
  }
  if (label == "sl2-adjoint") {
    MatrixRep rep = build_sl2_symmetric_power(2);
    rep.label = "sl2-adjoint";
    return rep;
  }
  if (label.rfind("soN-standard:", 0) == 0 || label.rfind("sp2n-standard:", 0) == 0 ||
      label.rfind("standard:", 0) == 0) {
    std::string spec = label.substr(label.find(':') + 1);
    if (spec.size() < 2) throw std::invalid_argument("build_rep: malformed label '" + label + "'");
    auto fam = family_from_letter(spec[0]);
    if (!fam) throw std::invalid_argument("build_rep: bad family in '" + label + "'");
    return build_quadratic_standard(*fam, std::stoi(spec.substr(1)));
  }
  if (label == "sl4-lambda2") return build_sl4_lambda2();
  if (label == "spin-so5") return build_spin(Family::B, 2);
  if (label == "spin8-plus") return build_spin(Family::D, 4, Chirality::plus);
  if (label == "spin8-minus") return build_spin(Family::D, 4, Chirality::minus);
  if (label.rfind("gl-diagonal", 0) == 0) {
    return build_diagonal_group_algebra(parse_size_suffix(label, "gl-diagonal", 2));
  }
  if (label.rfind("unipotent-upper", 0) == 0) {
    return build_unipotent_upper(parse_size_suffix(label, "unipotent-upper", 3));
  }
  std::string known;
  for (const auto& l : catalog_labels()) {
    if (!known.empty()) known += ", ";
    known += l;
  }
  throw std::invalid_argument("build_rep: unknown label '" + label +
                              "'; available: " + known);
}

}  // namespace

MatrixRep build_rep(const std::string& label) {
  size_t plus = label.find('+');
  if (plus == std::string::npos) return build_single(label);
  MatrixRep rep = build_single(label.substr(0, plus));
  size_t start = plus + 1;
  while (start < label.size()) {
    size_t next = label.find('+', start);
    if (next == std::string::npos) next = label.size();
    rep = direct_sum(rep, build_single(label.substr(start, next - start)));
    start = next + 1;
  }
  return rep;
}

std::vector<std::string> catalog_labels() {
  return {
      "sl2-sym-1",       "sl2-sym-2",       "sl2-sym-3",       "sl2-sym-4",
      "sl2-adjoint",     "soN-standard:B2", "soN-standard:B3", "soN-standard:B4",
      "sp2n-standard:C3", "sp2n-standard:C4", "soN-standard:D4", "sl4-lambda2",
      "spin-so5",        "spin8-plus",      "spin8-minus",     "gl-diagonal",
      "unipotent-upper",
  };
}

}  // namespace cayley
