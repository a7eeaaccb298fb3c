#include "cayleyrep/weight_diagram.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

#include "cayleyrep/exact_linalg.hpp"

namespace cayley {

std::set<Weight> WeightDiagram::support() const {
  std::set<Weight> s;
  for (const auto& [w, m] : mult) s.insert(w);
  return s;
}

long long WeightDiagram::dimension() const {
  long long d = 0;
  for (const auto& [w, m] : mult) d += m;
  return d;
}

int WeightDiagram::multiplicity(const Weight& w) const {
  auto it = mult.find(w);
  return it == mult.end() ? 0 : it->second;
}

bool dominated_by(const Weight& mu, const Weight& lambda, const RootSystemData& rs) {
  Weight diff = canonical_form(lambda, rs) - canonical_form(mu, rs);
  auto coeffs = simple_root_coefficients(diff, rs);
  if (!coeffs) return false;
  for (const auto& c : *coeffs) {
    if (!rat_is_integer(c) || sgn(c) < 0) return false;
  }
  return true;
}

namespace {

Weight validated_highest(const Weight& highest, const RootSystemData& rs) {
  Weight h = canonical_form(highest, rs);
  if (!in_weight_lattice(h, rs)) {
    throw std::invalid_argument("highest weight is not in the weight lattice of " +
                                system_name(rs));
  }
  if (!is_dominant(h, rs)) {
    throw std::invalid_argument(
        "highest weight is not dominant; apply dominant_representative first");
  }
  return h;
}

Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

std::set<Weight> weight_set(const Weight& highest, const RootSystemData& rs) {
  Weight h = validated_highest(highest, rs);
  std::set<Weight> support{h};
  std::map<Weight, bool> dominant_ok{{h, true}};
  std::deque<Weight> queue{h};
  while (!queue.empty()) {
    Weight w = std::move(queue.front());
    queue.pop_front();
    for (const auto& alpha : rs.simple_roots) {
      Weight v = w - alpha;
      if (support.count(v)) continue;
      Weight d = dominant_representative(v, rs);
      auto it = dominant_ok.find(d);
      if (it == dominant_ok.end()) {
        it = dominant_ok.emplace(d, dominated_by(d, h, rs)).first;
      }
      if (!it->second) continue;
      support.insert(v);
      queue.push_back(v);
    }
  }
  return support;
}

std::set<Weight> hull_coset_oracle(const Weight& highest, const RootSystemData& rs) {
  Weight h = validated_highest(highest, rs);
  const WeylOrbit orbit = weyl_orbit(h, rs);
  const int ambient = rs.ambient;
  const int n = rs.rank;

  std::vector<Rat> lo(ambient), hi(ambient);
  bool first = true;
  for (const auto& w : orbit.elements) {
    for (int j = 0; j < ambient; ++j) {
      if (first || w.coords[j] < lo[j]) lo[j] = w.coords[j];
      if (first || w.coords[j] > hi[j]) hi[j] = w.coords[j];
    }
    first = false;
  }

  std::vector<std::vector<Rat>> hull_points;
  hull_points.reserve(orbit.size());
  for (const auto& w : orbit.elements) hull_points.push_back(w.coords);
  const Rat radius2 = dot(h, h);

  // Hull and coset are both Weyl-stable, so one LP decides a whole orbit.
  std::map<Weight, bool> verdict;
  auto hull_member = [&](const Weight& mu) {
    auto it = verdict.find(mu);
    if (it != verdict.end()) return it->second;
    bool inside = dot(mu, mu) <= radius2 &&
                  lp_feasible_convex_combination(mu.coords, hull_points);
    for (const auto& mate : weyl_orbit(mu, rs).elements) {
      verdict.emplace(mate, inside);
    }
    return inside;
  };

  // Triangular enumeration of the coset highest + ZPhi inside the box.
  // Lattice basis: e_i - e_{i+1} plus a family-specific last vector
  // (e_n for B, 2 e_n for C/D, nothing extra for A).
  std::set<Weight> result;
  std::vector<Int> c(n, Int(0));
  std::vector<Rat> coords = h.coords;
  std::function<void(int)> recurse = [&](int k) {
    if (k == n) {
      Weight mu{coords};
      if (hull_member(mu)) result.insert(mu);
      return;
    }
    const Int c_prev = (k == 0) ? Int(0) : c[k - 1];
    const bool last = (k == n - 1);
    long step = 1;
    if (last && (rs.family == Family::C || rs.family == Family::D)) step = 2;
    // lo[k] <= h_k + step*c_k - c_prev <= hi[k]
    Rat lower = (lo[k] - h.coords[k] + Rat(c_prev)) / step;
    Rat upper = (hi[k] - h.coords[k] + Rat(c_prev)) / step;
    Int from = rat_ceil(lower);
    Int to = rat_floor(upper);
    if (rs.family == Family::A && last) {
      // Trailing coordinate h_{n+1} - c_n must stay in the box as well.
      Int from2 = rat_ceil(h.coords[n] - hi[n]);
      Int to2 = rat_floor(h.coords[n] - lo[n]);
      if (from2 > from) from = from2;
      if (to2 < to) to = to2;
    }
    for (Int v = from; v <= to; ++v) {
      c[k] = v;
      coords[k] = h.coords[k] + Rat(step) * Rat(v) - Rat(c_prev);
      if (rs.family == Family::A && last) coords[n] = h.coords[n] - Rat(v);
      recurse(k + 1);
    }
  };
  recurse(0);
  return result;
}

namespace {

struct DominantTable {
  Weight highest;
  std::set<Weight> support;
  std::map<Weight, Int> mult;  // dominant members only
};

DominantTable freudenthal_table(const Weight& highest, const RootSystemData& rs) {
  DominantTable table;
  table.highest = validated_highest(highest, rs);
  table.support = weight_set(table.highest, rs);

  Weight delta = Weight::zero(rs.ambient);
  for (const auto& alpha : rs.positive_roots) delta += alpha;
  delta *= make_rat(1, 2);

  struct Entry {
    Weight w;
    Rat level;
  };
  std::vector<Entry> dominants;
  for (const auto& w : table.support) {
    if (!is_dominant(w, rs)) continue;
    auto coeffs = simple_root_coefficients(table.highest - w, rs);
    Rat level;
    for (const auto& cc : *coeffs) level += cc;
    dominants.push_back({w, level});
  }
  std::sort(dominants.begin(), dominants.end(),
            [](const Entry& a, const Entry& b) {
              int c = cmp(a.level, b.level);
              if (c != 0) return c < 0;
              return a.w < b.w;
            });

  const Weight top = table.highest + delta;
  const Rat top_norm = dot(top, top);
  for (const auto& entry : dominants) {
    const Weight& mu = entry.w;
    if (mu == table.highest) {
      table.mult[mu] = 1;
      continue;
    }
    Rat numerator;
    for (const auto& alpha : rs.positive_roots) {
      Weight shifted = mu;
      for (;;) {
        shifted += alpha;
        if (!table.support.count(shifted)) break;
        const Int& m = table.mult.at(dominant_representative(shifted, rs));
        numerator += Rat(m) * dot(shifted, alpha);
      }
    }
    const Weight mud = mu + delta;
    Rat denominator = top_norm - dot(mud, mud);
    if (sgn(denominator) == 0) {
      throw std::logic_error("freudenthal: vanishing denominator");
    }
    Rat value = 2 * numerator / denominator;
    if (!rat_is_integer(value) || sgn(value) <= 0) {
      throw std::logic_error("freudenthal: non-positive-integer multiplicity");
    }
    table.mult[mu] = value.get_num();
  }
  return table;
}

}  // namespace

WeightDiagram weight_diagram(const Weight& highest, const RootSystemData& rs) {
  DominantTable table = freudenthal_table(highest, rs);
  WeightDiagram diagram;
  diagram.highest = table.highest;
  for (const auto& w : table.support) {
    const Int& m = table.mult.at(dominant_representative(w, rs));
    if (!m.fits_sint_p()) throw std::overflow_error("weight_diagram: multiplicity overflow");
    diagram.mult[w] = static_cast<int>(m.get_si());
  }
  return diagram;
}

int freudenthal_multiplicity(const Weight& highest, const Weight& target,
                             const RootSystemData& rs) {
  DominantTable table = freudenthal_table(highest, rs);
  Weight t = canonical_form(target, rs);
  if (!table.support.count(t)) return 0;
  const Int& m = table.mult.at(dominant_representative(t, rs));
  if (!m.fits_sint_p()) throw std::overflow_error("freudenthal: multiplicity overflow");
  return static_cast<int>(m.get_si());
}

}  // namespace cayley
