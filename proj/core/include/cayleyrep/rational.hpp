#ifndef CAYLEYREP_RATIONAL_HPP
#define CAYLEYREP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cayley {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator). Backed by GMP.
using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

/// Parses "a", "-a/b" or decimal-free fraction strings. Throws
/// std::invalid_argument on malformed input or zero denominator.
Rat parse_rat(std::string_view text);

/// "a" or "a/b", canonical.
std::string rat_to_string(const Rat& q);

bool rat_is_integer(const Rat& q);

/// Gaussian rational a + b*i with exact field arithmetic.
struct GaussRat {
  Rat re;
  Rat im;

  GaussRat() = default;
  GaussRat(Rat r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  static GaussRat integer(long v) { return GaussRat(make_rat(v)); }
  static GaussRat imaginary_unit() { return GaussRat(make_rat(0), make_rat(1)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussRat conj() const { return GaussRat(re, -im); }
  /// |z|^2 = a^2 + b^2, a nonnegative rational.
  Rat norm2() const;

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);  // throws std::domain_error on /0
  GaussRat operator-() const { return GaussRat(-re, -im); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

/// Lexicographic (re, im) order; used for deterministic containers, not as a
/// field order.
bool lex_less(const GaussRat& a, const GaussRat& b);

/// "a/b", "c/d*i" or "a/b+c/d*i" (sign folded into the imaginary part).
std::string gauss_to_string(const GaussRat& z);

}  // namespace cayley

#endif
