#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayleyrep/detail/rng.hpp"
#include "cayleyrep/exact_linalg.hpp"
#include "oracles.hpp"

using namespace cayley;

namespace {

ExactMatrix random_matrix(detail::SplitMix64& rng, int rows, int cols) {
  ExactMatrix m(rows, cols);
  for (auto& e : m.entries) {
    e.re = make_rat(rng.uniform_int(-3, 3), rng.uniform_int(1, 3));
    e.im = make_rat(rng.uniform_int(-2, 2), rng.uniform_int(1, 2));
  }
  return m;
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  CHECK(rat_to_string(make_rat(2, 4)) == "1/2");
  CHECK(rat_to_string(make_rat(-3, -6)) == "1/2");
  CHECK(rat_to_string(make_rat(3, -6)) == "-1/2");
  CHECK(rat_to_string(parse_rat("6/4")) == "3/2");
  CHECK(parse_rat("-7") == make_rat(-7));
  CHECK(rat_is_integer(parse_rat("4/2")));
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);
}

TEST_CASE("gaussian rational field ops") {
  GaussRat z(make_rat(1, 2), make_rat(-1, 3));
  CHECK(z.conj().conj() == z);
  CHECK((z * z.conj()).im == 0);
  GaussRat i = GaussRat::imaginary_unit();
  CHECK(i * i == GaussRat::integer(-1));
  GaussRat w = z / z;
  CHECK(w == GaussRat::integer(1));
  CHECK_THROWS_AS(z / GaussRat{}, std::domain_error);
  CHECK(gauss_to_string(GaussRat(make_rat(1, 2), make_rat(-1, 3))) == "1/2-1/3*i");
  CHECK(gauss_to_string(GaussRat(make_rat(0), make_rat(1))) == "1*i");
  CHECK(gauss_to_string(GaussRat(make_rat(-2))) == "-2");
}

TEST_CASE("rank of identity and zero") {
  CHECK(rank(ExactMatrix::identity(3)) == 3);
  CHECK(rank(ExactMatrix(4, 5)) == 0);
}

TEST_CASE("rank of the D4 half-spin orbit matrix is 4") {
  // Columns: all half-integer sign vectors with an even number of minus signs.
  std::vector<std::vector<int>> signs;
  for (int mask = 0; mask < 16; ++mask) {
    if (__builtin_popcount(mask) % 2 == 0) {
      signs.push_back({(mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1, (mask & 4) ? -1 : 1,
                       (mask & 8) ? -1 : 1});
    }
  }
  REQUIRE(signs.size() == 8);
  ExactMatrix m(4, 8);
  for (int c = 0; c < 8; ++c) {
    for (int r = 0; r < 4; ++r) m.at(r, c) = GaussRat(make_rat(signs[c][r], 2));
  }
  CHECK(rank(m) == 4);
  CHECK(testing::bareiss_rank(m) == 4);
}

TEST_CASE("rank equals transpose rank and the Bareiss oracle on random input") {
  detail::SplitMix64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = static_cast<int>(rng.uniform_int(1, 5));
    int cols = static_cast<int>(rng.uniform_int(1, 5));
    ExactMatrix m = random_matrix(rng, rows, cols);
    int r = rank(m);
    CHECK(r == rank(m.transpose()));
    CHECK(r == testing::bareiss_rank(m));
  }
}

TEST_CASE("span membership basics") {
  std::vector<ExactMatrix> basis;
  basis.push_back(ExactMatrix::unit(2, 0, 0));
  basis.push_back(ExactMatrix::unit(2, 1, 1));

  auto hit = span_membership(basis[0], basis);
  REQUIRE(hit.member);
  CHECK(hit.coefficients[0] == GaussRat::integer(1));
  CHECK(hit.coefficients[1] == GaussRat::integer(0));

  auto zero = span_membership(ExactMatrix(2, 2), basis);
  REQUIRE(zero.member);
  CHECK(zero.coefficients[0].is_zero());
  CHECK(zero.coefficients[1].is_zero());

  CHECK_FALSE(span_membership(ExactMatrix::unit(2, 0, 1), basis).member);
  CHECK_THROWS_AS(span_membership(ExactMatrix(3, 3), basis), std::invalid_argument);
  CHECK_THROWS_AS(span_membership(ExactMatrix(2, 2), {}), std::invalid_argument);
}

TEST_CASE("E12 is not in the antisymmetric 3x3 span") {
  std::vector<ExactMatrix> antisym;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      ExactMatrix m(3, 3);
      m.at(i, j) = GaussRat::integer(1);
      m.at(j, i) = GaussRat::integer(-1);
      antisym.push_back(std::move(m));
    }
  }
  CHECK_FALSE(span_membership(ExactMatrix::unit(3, 0, 1), antisym).member);
}

TEST_CASE("membership coefficients reconstruct the input bit-exactly") {
  detail::SplitMix64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<ExactMatrix> basis;
    for (int b = 0; b < 4; ++b) basis.push_back(random_matrix(rng, 3, 3));
    ExactMatrix x(3, 3);
    std::vector<GaussRat> wanted;
    for (const auto& b : basis) {
      GaussRat c(make_rat(rng.uniform_int(-2, 2), rng.uniform_int(1, 2)),
                 make_rat(rng.uniform_int(-1, 1)));
      wanted.push_back(c);
      x += c * b;
    }
    auto hit = span_membership(x, basis);
    REQUIRE(hit.member);
    ExactMatrix rebuilt(3, 3);
    for (size_t i = 0; i < basis.size(); ++i) rebuilt += hit.coefficients[i] * basis[i];
    CHECK(rebuilt == x);
  }
}

TEST_CASE("convex combination feasibility") {
  std::vector<std::vector<Rat>> square{{make_rat(1), make_rat(0)},
                                       {make_rat(-1), make_rat(0)},
                                       {make_rat(0), make_rat(1)},
                                       {make_rat(0), make_rat(-1)}};
  CHECK(lp_feasible_convex_combination(square[0], square));
  std::vector<Rat> mid{make_rat(1, 2), make_rat(1, 2)};
  CHECK(lp_feasible_convex_combination(mid, square));
  std::vector<Rat> outside{make_rat(2), make_rat(0)};
  CHECK_FALSE(lp_feasible_convex_combination(outside, square));
  CHECK_THROWS_AS(lp_feasible_convex_combination(mid, {}), std::invalid_argument);
  std::vector<std::vector<Rat>> bad{{make_rat(1)}};
  CHECK_THROWS_AS(lp_feasible_convex_combination(mid, bad), std::invalid_argument);
}

TEST_CASE("LP agrees with the 2-D hull oracle on random point sets") {
  detail::SplitMix64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    int count = static_cast<int>(rng.uniform_int(1, 8));
    std::vector<std::vector<Rat>> points;
    for (int i = 0; i < count; ++i) {
      points.push_back({make_rat(rng.uniform_int(-4, 4), rng.uniform_int(1, 2)),
                        make_rat(rng.uniform_int(-4, 4), rng.uniform_int(1, 2))});
    }
    for (int probe = 0; probe < 6; ++probe) {
      std::vector<Rat> p{make_rat(rng.uniform_int(-4, 4), rng.uniform_int(1, 2)),
                         make_rat(rng.uniform_int(-4, 4), rng.uniform_int(1, 2))};
      CHECK(lp_feasible_convex_combination(p, points) == testing::hull2d_member(p, points));
    }
  }
}
