#ifndef CAYLEYREP_ROOT_SYSTEM_HPP
#define CAYLEYREP_ROOT_SYSTEM_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cayleyrep/weight.hpp"

namespace cayley {

enum class Family { A, B, C, D };

char family_letter(Family f);
std::optional<Family> family_from_letter(char c);

/// Root data for the classical families, in the orthonormal L_i basis.
/// Type A_n lives in the zero-sum hyperplane of an (n+1)-dimensional ambient
/// space; B/C/D_n use an n-dimensional ambient space.
struct RootSystemData {
  Family family;
  int rank = 0;
  int ambient = 0;
  std::vector<Weight> simple_roots;
  std::vector<Weight> positive_roots;
  std::vector<Weight> fundamental_weights;

  /// Set when a small-rank request was redirected through an exceptional
  /// isomorphism (B1/C1 -> A1, C2 -> B2, D3 -> A3). coeff_map[i] is the
  /// target-system node carrying the requested system's i-th fundamental
  /// weight.
  struct Redirect {
    Family from_family;
    int from_rank;
    std::vector<int> coeff_map;
  };
  std::optional<Redirect> redirect;
};

/// Supported ranks: A n>=1, B n>=2, C n>=3, D n>=4. Smaller ranks are
/// redirected through the classical isomorphisms; genuinely non-simple
/// requests (D1, D2) throw std::invalid_argument naming the decomposition.
RootSystemData build_root_system(Family family, int rank);

/// Mirror image of w across the hyperplane orthogonal to root; involutive.
/// Throws std::invalid_argument on a zero root.
Weight reflect(const Weight& w, const Weight& root);

struct WeylOrbit {
  Weight seed;
  std::set<Weight> elements;
  size_t size() const { return elements.size(); }
  bool contains(const Weight& w) const { return elements.count(w) > 0; }
};

/// Breadth-first closure of {w} under the simple reflections.
WeylOrbit weyl_orbit(const Weight& w, const RootSystemData& rs);

/// |W.w| by the stabilizer-index formula (no enumeration); agrees with
/// weyl_orbit(w).size().
long long weyl_orbit_size(const Weight& w, const RootSystemData& rs);

Int weyl_group_order(const RootSystemData& rs);

/// The unique orbit element in the closed fundamental chamber.
Weight dominant_representative(const Weight& w, const RootSystemData& rs);

bool is_dominant(const Weight& w, const RootSystemData& rs);

/// Zero-sum representative for type A; identity elsewhere. Throws on a
/// dimension mismatch with rs.ambient.
Weight canonical_form(const Weight& w, const RootSystemData& rs);

/// Exact coefficients of w over the simple roots, or nullopt when w is
/// outside their span.
std::optional<std::vector<Rat>> simple_root_coefficients(const Weight& w,
                                                         const RootSystemData& rs);

/// True iff w is an integer combination of simple roots.
bool in_root_lattice(const Weight& w, const RootSystemData& rs);

/// Pairings <w, alpha_i^vee> against the simple coroots.
std::vector<Rat> fundamental_coefficients(const Weight& w, const RootSystemData& rs);

/// True iff all coroot pairings are integers (w in the weight lattice).
bool in_weight_lattice(const Weight& w, const RootSystemData& rs);

/// Builds sum_i coeffs[i] * fundamental_weights[i].
Weight weight_from_fundamental(const std::vector<Rat>& coeffs,
                               const RootSystemData& rs);

std::string system_name(const RootSystemData& rs);

}  // namespace cayley

#endif
