#ifndef CAYLEYREP_WEIGHT_HPP
#define CAYLEYREP_WEIGHT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "cayleyrep/rational.hpp"

namespace cayley {

/// Exact weight vector in the orthonormal L_i basis. Ambient length is the
/// rank for types B/C/D and rank+1 for type A (zero-sum representative).
struct Weight {
  std::vector<Rat> coords;

  Weight() = default;
  explicit Weight(std::vector<Rat> c) : coords(std::move(c)) {}
  static Weight zero(int dim) { return Weight(std::vector<Rat>(dim)); }

  int dim() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  Weight operator-() const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Rat& s);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rat& s, Weight a) { return a *= s; }
  friend bool operator==(const Weight& a, const Weight& b) {
    return a.coords == b.coords;
  }
  /// Lexicographic; gives the deterministic ordering used by weight sets.
  friend bool operator<(const Weight& a, const Weight& b);
};

/// Euclidean pairing in the L basis.
Rat dot(const Weight& a, const Weight& b);

/// "1/2,1/2,-1/2" style round trip.
Weight parse_weight(std::string_view text);
std::string weight_to_string(const Weight& w);

}  // namespace cayley

#endif
