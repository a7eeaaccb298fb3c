#include "cayleyrep/weight.hpp"

#include <stdexcept>

namespace cayley {

bool Weight::is_zero() const {
  for (const auto& c : coords) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (auto& c : w.coords) c = -c;
  return w;
}

Weight& Weight::operator+=(const Weight& o) {
  if (coords.size() != o.coords.size()) {
    throw std::invalid_argument("Weight: dimension mismatch");
  }
  for (size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (coords.size() != o.coords.size()) {
    throw std::invalid_argument("Weight: dimension mismatch");
  }
  for (size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Weight& Weight::operator*=(const Rat& s) {
  for (auto& c : coords) c *= s;
  return *this;
}

bool operator<(const Weight& a, const Weight& b) {
  const size_t n = std::min(a.coords.size(), b.coords.size());
  for (size_t i = 0; i < n; ++i) {
    int c = cmp(a.coords[i], b.coords[i]);
    if (c != 0) return c < 0;
  }
  return a.coords.size() < b.coords.size();
}

Rat dot(const Weight& a, const Weight& b) {
  if (a.coords.size() != b.coords.size()) {
    throw std::invalid_argument("dot: dimension mismatch");
  }
  Rat s;
  for (size_t i = 0; i < a.coords.size(); ++i) s += a.coords[i] * b.coords[i];
  return s;
}

Weight parse_weight(std::string_view text) {
  std::vector<Rat> coords;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    coords.push_back(parse_rat(text.substr(start, end - start)));
    start = end + 1;
    if (end == text.size()) break;
  }
  if (coords.empty()) throw std::invalid_argument("parse_weight: empty");
  return Weight(std::move(coords));
}

std::string weight_to_string(const Weight& w) {
  std::string out;
  for (size_t i = 0; i < w.coords.size(); ++i) {
    if (i) out += ',';
    out += rat_to_string(w.coords[i]);
  }
  return out;
}

}  // namespace cayley
