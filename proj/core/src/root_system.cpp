#include "cayleyrep/root_system.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace cayley {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

std::optional<Family> family_from_letter(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
  }
  return std::nullopt;
}

namespace {

Weight basis_vector(int dim, int i, long value = 1) {
  Weight w = Weight::zero(dim);
  w.coords[i] = value;
  return w;
}

RootSystemData build_a(int n) {
  RootSystemData rs;
  rs.family = Family::A;
  rs.rank = n;
  rs.ambient = n + 1;
  for (int i = 0; i < n; ++i) {
    Weight a = Weight::zero(n + 1);
    a.coords[i] = 1;
    a.coords[i + 1] = -1;
    rs.simple_roots.push_back(a);
  }
  for (int j = 0; j < n + 1; ++j) {
    for (int k = j + 1; k < n + 1; ++k) {
      Weight a = Weight::zero(n + 1);
      a.coords[j] = 1;
      a.coords[k] = -1;
      rs.positive_roots.push_back(a);
    }
  }
  for (int i = 1; i <= n; ++i) {
    Weight w = Weight::zero(n + 1);
    Rat shift(i, n + 1);
    shift.canonicalize();
    for (int j = 0; j < n + 1; ++j) w.coords[j] = (j < i ? Rat(1) : Rat(0)) - shift;
    rs.fundamental_weights.push_back(w);
  }
  return rs;
}

RootSystemData build_bcd(Family f, int n) {
  RootSystemData rs;
  rs.family = f;
  rs.rank = n;
  rs.ambient = n;
  for (int i = 0; i + 1 < n; ++i) {
    Weight a = Weight::zero(n);
    a.coords[i] = 1;
    a.coords[i + 1] = -1;
    rs.simple_roots.push_back(a);
  }
  if (f == Family::B) {
    rs.simple_roots.push_back(basis_vector(n, n - 1));
  } else if (f == Family::C) {
    rs.simple_roots.push_back(basis_vector(n, n - 1, 2));
  } else {
    Weight a = Weight::zero(n);
    a.coords[n - 2] = 1;
    a.coords[n - 1] = 1;
    rs.simple_roots.push_back(a);
  }

  if (f == Family::B) {
    for (int i = 0; i < n; ++i) rs.positive_roots.push_back(basis_vector(n, i));
  } else if (f == Family::C) {
    for (int i = 0; i < n; ++i) rs.positive_roots.push_back(basis_vector(n, i, 2));
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      Weight minus = Weight::zero(n), plus = Weight::zero(n);
      minus.coords[j] = 1;
      minus.coords[k] = -1;
      plus.coords[j] = 1;
      plus.coords[k] = 1;
      rs.positive_roots.push_back(minus);
      rs.positive_roots.push_back(plus);
    }
  }

  for (int i = 1; i <= n; ++i) {
    Weight w = Weight::zero(n);
    for (int j = 0; j < i; ++j) w.coords[j] = 1;
    rs.fundamental_weights.push_back(w);
  }
  if (f == Family::B) {
    for (auto& c : rs.fundamental_weights[n - 1].coords) c /= 2;
  } else if (f == Family::D) {
    Weight& minus = rs.fundamental_weights[n - 2];
    minus = rs.fundamental_weights[n - 1];
    for (auto& c : minus.coords) c /= 2;
    minus.coords[n - 1] = -minus.coords[n - 1];
    for (auto& c : rs.fundamental_weights[n - 1].coords) c /= 2;
  }
  return rs;
}

}  // namespace

RootSystemData build_root_system(Family family, int rank) {
  if (rank < 1) throw std::invalid_argument("build_root_system: rank must be >= 1");
  // Exceptional isomorphism redirects for the low ranks not covered by
  // Table-1 ranges (A n>=1, B n>=2, C n>=3, D n>=4).
  auto redirected = [&](Family to, int to_rank,
                        std::vector<int> coeff_map) -> RootSystemData {
    RootSystemData rs = build_root_system(to, to_rank);
    rs.redirect = RootSystemData::Redirect{family, rank, std::move(coeff_map)};
    return rs;
  };
  switch (family) {
    case Family::A:
      return build_a(rank);
    case Family::B:
      if (rank == 1) return redirected(Family::A, 1, {0});  // so3 ~ sl2
      return build_bcd(Family::B, rank);
    case Family::C:
      if (rank == 1) return redirected(Family::A, 1, {0});  // sp2 ~ sl2
      if (rank == 2) return redirected(Family::B, 2, {1, 0});  // sp4 ~ so5, nodes swap
      return build_bcd(Family::C, rank);
    case Family::D:
      if (rank == 1) {
        throw std::invalid_argument(
            "build_root_system: D1 (so2) is abelian, not a simple system");
      }
      if (rank == 2) {
        throw std::invalid_argument(
            "build_root_system: D2 (so4) is not simple; it splits as A1 x A1");
      }
      if (rank == 3) return redirected(Family::A, 3, {1, 0, 2});  // so6 ~ sl4
      return build_bcd(Family::D, rank);
  }
  throw std::invalid_argument("build_root_system: unknown family");
}

Weight reflect(const Weight& w, const Weight& root) {
  Rat rr = dot(root, root);
  if (sgn(rr) == 0) throw std::invalid_argument("reflect: zero root");
  Rat factor = 2 * dot(w, root) / rr;
  Weight out = w;
  for (int i = 0; i < w.dim(); ++i) out.coords[i] -= factor * root.coords[i];
  return out;
}

WeylOrbit weyl_orbit(const Weight& w, const RootSystemData& rs) {
  Weight seed = canonical_form(w, rs);
  WeylOrbit orbit;
  orbit.seed = seed;
  orbit.elements.insert(seed);
  std::deque<Weight> queue{seed};
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& alpha : rs.simple_roots) {
      Weight next = reflect(cur, alpha);
      if (orbit.elements.insert(next).second) queue.push_back(next);
    }
  }
  return orbit;
}

Int weyl_group_order(const RootSystemData& rs) {
  const int n = rs.rank;
  Int order = 1;
  switch (rs.family) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) order *= i;
      return order;
    case Family::B:
    case Family::C:
      for (int i = 2; i <= n; ++i) order *= i;
      for (int i = 0; i < n; ++i) order *= 2;
      return order;
    case Family::D:
      for (int i = 2; i <= n; ++i) order *= i;
      for (int i = 0; i + 1 < n; ++i) order *= 2;
      return order;
  }
  return order;
}

long long weyl_orbit_size(const Weight& w, const RootSystemData& rs) {
  Weight c = canonical_form(w, rs);
  Int size;
  if (rs.family == Family::A) {
    std::vector<Rat> vals = c.coords;
    std::sort(vals.begin(), vals.end());
    Int perms = 1;
    for (int i = 2; i <= rs.ambient; ++i) perms *= i;
    Int stab = 1;
    size_t i = 0;
    while (i < vals.size()) {
      size_t j = i;
      while (j < vals.size() && vals[j] == vals[i]) ++j;
      for (size_t k = 2; k <= j - i; ++k) stab *= static_cast<long>(k);
      i = j;
    }
    size = perms / stab;
  } else {
    std::vector<Rat> vals;
    int zeros = 0;
    for (const auto& v : c.coords) {
      if (sgn(v) == 0) {
        ++zeros;
      } else {
        vals.push_back(abs(v));
      }
    }
    std::sort(vals.begin(), vals.end());
    Int perms = 1;
    for (int i = 2; i <= rs.rank; ++i) perms *= i;
    Int stab = 1;
    for (int k = 2; k <= zeros; ++k) stab *= k;
    size_t i = 0;
    while (i < vals.size()) {
      size_t j = i;
      while (j < vals.size() && vals[j] == vals[i]) ++j;
      for (size_t k = 2; k <= j - i; ++k) stab *= static_cast<long>(k);
      i = j;
    }
    int sign_bits = static_cast<int>(vals.size());
    if (rs.family == Family::D && zeros == 0) --sign_bits;
    Int signs = 1;
    for (int k = 0; k < sign_bits; ++k) signs *= 2;
    size = perms / stab * signs;
  }
  if (!size.fits_slong_p()) throw std::overflow_error("weyl_orbit_size: overflow");
  return size.get_si();
}

Weight canonical_form(const Weight& w, const RootSystemData& rs) {
  if (w.dim() != rs.ambient) {
    throw std::invalid_argument("weight dimension does not match ambient dimension of " +
                                system_name(rs));
  }
  if (rs.family != Family::A) return w;
  Rat mean;
  for (const auto& c : w.coords) mean += c;
  mean /= rs.ambient;
  Weight out = w;
  for (auto& c : out.coords) c -= mean;
  return out;
}

Weight dominant_representative(const Weight& w, const RootSystemData& rs) {
  Weight c = canonical_form(w, rs);
  switch (rs.family) {
    case Family::A:
      std::sort(c.coords.begin(), c.coords.end(),
                [](const Rat& a, const Rat& b) { return a > b; });
      return c;
    case Family::B:
    case Family::C: {
      for (auto& v : c.coords) v = abs(v);
      std::sort(c.coords.begin(), c.coords.end(),
                [](const Rat& a, const Rat& b) { return a > b; });
      return c;
    }
    case Family::D: {
      int negatives = 0;
      bool has_zero = false;
      for (auto& v : c.coords) {
        if (sgn(v) < 0) ++negatives;
        if (sgn(v) == 0) has_zero = true;
        v = abs(v);
      }
      std::sort(c.coords.begin(), c.coords.end(),
                [](const Rat& a, const Rat& b) { return a > b; });
      // Even sign changes only: an odd flip count sticks to the smallest
      // coordinate unless a zero absorbs it.
      if ((negatives % 2) == 1 && !has_zero) {
        c.coords.back() = -c.coords.back();
      }
      return c;
    }
  }
  return c;
}

bool is_dominant(const Weight& w, const RootSystemData& rs) {
  Weight c = canonical_form(w, rs);
  const auto& a = c.coords;
  switch (rs.family) {
    case Family::A:
      for (size_t i = 0; i + 1 < a.size(); ++i) {
        if (a[i] < a[i + 1]) return false;
      }
      return true;
    case Family::B:
    case Family::C:
      for (size_t i = 0; i + 1 < a.size(); ++i) {
        if (a[i] < a[i + 1]) return false;
      }
      return sgn(a.back()) >= 0;
    case Family::D:
      for (size_t i = 0; i + 2 < a.size(); ++i) {
        if (a[i] < a[i + 1]) return false;
      }
      return a[a.size() - 2] >= abs(a.back());
  }
  return false;
}

std::optional<std::vector<Rat>> simple_root_coefficients(const Weight& w,
                                                         const RootSystemData& rs) {
  Weight c = canonical_form(w, rs);
  const int m = rs.ambient;
  const int n = rs.rank;
  // Augmented system [simple roots as columns | c], exact elimination.
  std::vector<std::vector<Rat>> t(m, std::vector<Rat>(n + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = rs.simple_roots[j].coords[i];
    t[i][n] = c.coords[i];
  }
  std::vector<int> pivot_row(n, -1);
  int r = 0;
  for (int col = 0; col < n && r < m; ++col) {
    int piv = -1;
    for (int i = r; i < m; ++i) {
      if (sgn(t[i][col]) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(t[r], t[piv]);
    for (int i = 0; i < m; ++i) {
      if (i == r || sgn(t[i][col]) == 0) continue;
      Rat f = t[i][col] / t[r][col];
      for (int j = col; j <= n; ++j) t[i][j] -= f * t[r][j];
    }
    pivot_row[col] = r;
    ++r;
  }
  for (int i = r; i < m; ++i) {
    if (sgn(t[i][n]) != 0) return std::nullopt;  // inconsistent
  }
  std::vector<Rat> coeffs(n);
  for (int col = 0; col < n; ++col) {
    if (pivot_row[col] < 0) return std::nullopt;  // roots dependent; not reached
    coeffs[col] = t[pivot_row[col]][n] / t[pivot_row[col]][col];
  }
  return coeffs;
}

bool in_root_lattice(const Weight& w, const RootSystemData& rs) {
  auto coeffs = simple_root_coefficients(w, rs);
  if (!coeffs) return false;
  for (const auto& c : *coeffs) {
    if (!rat_is_integer(c)) return false;
  }
  return true;
}

std::vector<Rat> fundamental_coefficients(const Weight& w, const RootSystemData& rs) {
  Weight c = canonical_form(w, rs);
  std::vector<Rat> out;
  out.reserve(rs.simple_roots.size());
  for (const auto& alpha : rs.simple_roots) {
    out.push_back(2 * dot(c, alpha) / dot(alpha, alpha));
  }
  return out;
}

bool in_weight_lattice(const Weight& w, const RootSystemData& rs) {
  for (const auto& c : fundamental_coefficients(w, rs)) {
    if (!rat_is_integer(c)) return false;
  }
  return true;
}

Weight weight_from_fundamental(const std::vector<Rat>& coeffs,
                               const RootSystemData& rs) {
  if (coeffs.size() != rs.fundamental_weights.size()) {
    throw std::invalid_argument("weight_from_fundamental: expected " +
                                std::to_string(rs.fundamental_weights.size()) +
                                " coefficients");
  }
  Weight w = Weight::zero(rs.ambient);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    w += coeffs[i] * rs.fundamental_weights[i];
  }
  return w;
}

std::string system_name(const RootSystemData& rs) {
  return std::string(1, family_letter(rs.family)) + std::to_string(rs.rank);
}

}  // namespace cayley
