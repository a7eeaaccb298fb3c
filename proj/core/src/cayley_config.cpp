#include "cayleyrep/cayley_config.hpp"

#include <stdexcept>

#include "cayleyrep/exact_linalg.hpp"

namespace cayley {

namespace {

ExactMatrix weight_as_row(const Weight& w) {
  ExactMatrix m(1, w.dim());
  for (int j = 0; j < w.dim(); ++j) m.at(0, j) = GaussRat(w.coords[j]);
  return m;
}

ExactMatrix weights_as_matrix(const std::vector<Weight>& ws) {
  ExactMatrix m(static_cast<int>(ws.size()), ws.front().dim());
  for (size_t i = 0; i < ws.size(); ++i) {
    for (int j = 0; j < ws[i].dim(); ++j) {
      m.at(static_cast<int>(i), j) = GaussRat(ws[i].coords[j]);
    }
  }
  return m;
}

// Rank of the orbit span without full enumeration: grow the orbit lazily by
// simple reflections and stop as soon as the span is full.
int lazy_orbit_rank(const Weight& seed, const RootSystemData& rs, int target) {
  std::set<Weight> seen{seed};
  std::vector<Weight> queue{seed};
  SpanBasis span;
  span.add(weight_as_row(seed));
  size_t head = 0;
  while (span.dimension() < target && head < queue.size()) {
    Weight w = queue[head++];
    for (const auto& alpha : rs.simple_roots) {
      Weight next = reflect(w, alpha);
      if (!seen.insert(next).second) continue;
      queue.push_back(next);
      span.add(weight_as_row(next));
      if (span.dimension() == target) break;
    }
  }
  return span.dimension();
}

}  // namespace

ConfigReport is_cayley_configuration(const Weight& highest, const RootSystemData& rs,
                                     ConfigEvidence evidence) {
  Weight h = canonical_form(highest, rs);
  if (h.is_zero()) {
    throw std::invalid_argument(
        "is_cayley_configuration: the trivial representation is excluded");
  }
  if (!is_dominant(h, rs)) {
    throw std::invalid_argument(
        "is_cayley_configuration: highest weight must be dominant");
  }

  ConfigReport report;
  report.highest = h;
  report.rank_needed = rs.rank;
  report.orbit_size = weyl_orbit_size(h, rs);
  // The orbit is origin-symmetric iff -h lies in it.
  report.symmetric_about_origin = dominant_representative(-h, rs) == h;

  const bool size_ok = report.orbit_size == 2LL * rs.rank;
  if (evidence == ConfigEvidence::screening) {
    report.orbit_rank = lazy_orbit_rank(h, rs, rs.rank);
    const bool cheap_ok =
        size_ok && report.orbit_rank == rs.rank && report.symmetric_about_origin;
    if (!cheap_ok) {
      report.verdict = false;
      report.witness = h;
      return report;
    }
  }

  const WeylOrbit orbit = weyl_orbit(h, rs);
  if (evidence == ConfigEvidence::full) {
    std::vector<Weight> rows(orbit.elements.begin(), orbit.elements.end());
    report.orbit_rank = rank(weights_as_matrix(rows));
  }

  std::set<Weight> support = weight_set(h, rs);
  std::set<Weight> extra;
  for (const auto& w : support) {
    if (!orbit.contains(w)) extra.insert(w);
  }
  report.support_minus_orbit = extra;

  bool extra_ok = true;
  for (const auto& w : extra) {
    if (!w.is_zero()) extra_ok = false;
  }
  // The lex-largest violator is W-dominant-ish and never the origin, so e.g.
  // weight 1 (not -1) is reported for the sl2 cubic counterexample.
  if (!extra_ok) report.witness = *extra.rbegin();

  report.verdict = size_ok && report.orbit_rank == rs.rank &&
                   report.symmetric_about_origin && extra_ok;
  if (!report.verdict && !report.witness) {
    report.witness = *orbit.elements.rbegin();
  }
  if (report.verdict) report.witness.reset();
  return report;
}

bool cartan_cube_closure(const std::set<Weight>& support, int rank_needed) {
  std::vector<Weight> nonzero;
  for (const auto& w : support) {
    if (!w.is_zero()) nonzero.push_back(w);
  }
  if (nonzero.empty()) return true;  // only the origin: vacuous

  // Greedy maximal independent family; the condition is basis-free.
  std::vector<Weight> family;
  SpanBasis span;
  for (const auto& w : nonzero) {
    if (span.add(weight_as_row(w))) family.push_back(w);
  }
  if (span.dimension() != rank_needed) return false;

  std::set<Weight> allowed;
  for (const auto& w : family) {
    allowed.insert(w);
    allowed.insert(-w);
  }
  for (const auto& w : nonzero) {
    if (!allowed.count(w)) return false;
  }
  return true;
}

}  // namespace cayley
