#include "cayleyrep/rational.hpp"

#include <stdexcept>

namespace cayley {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("parse_rat: empty string");
  std::string s(text);
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/')) {
      throw std::invalid_argument("parse_rat: bad character in '" + s + "'");
    }
  }
  Rat q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
  }
  if (sgn(q.get_den()) == 0) {
    throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
  }
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

Rat GaussRat::norm2() const { return re * re + im * im; }

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  Rat r = re * o.re - im * o.im;
  Rat i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  Rat n2 = o.norm2();
  if (sgn(n2) == 0) throw std::domain_error("GaussRat: division by zero");
  Rat r = (re * o.re + im * o.im) / n2;
  Rat i = (im * o.re - re * o.im) / n2;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

bool lex_less(const GaussRat& a, const GaussRat& b) {
  int c = cmp(a.re, b.re);
  if (c != 0) return c < 0;
  return cmp(a.im, b.im) < 0;
}

std::string gauss_to_string(const GaussRat& z) {
  const bool has_re = sgn(z.re) != 0;
  const bool has_im = sgn(z.im) != 0;
  if (!has_im) return rat_to_string(z.re);
  std::string im_part = rat_to_string(z.im) + "*i";
  if (!has_re) return im_part;
  if (sgn(z.im) > 0) return rat_to_string(z.re) + "+" + im_part;
  return rat_to_string(z.re) + im_part;  // minus sign carried by im
}

}  // namespace cayley
