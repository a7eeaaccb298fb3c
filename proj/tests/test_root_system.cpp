#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cayleyrep/detail/rng.hpp"
#include "helpers.hpp"

using namespace cayley;
using cayley::testing::RS;
using cayley::testing::W;

namespace {

std::set<Weight> as_set(const std::vector<Weight>& v) { return {v.begin(), v.end()}; }

Weight random_lattice_weight(detail::SplitMix64& rng, const RootSystemData& rs) {
  std::vector<Rat> coeffs;
  for (int i = 0; i < rs.rank; ++i) coeffs.push_back(make_rat(rng.uniform_int(0, 3)));
  Weight w = weight_from_fundamental(coeffs, rs);
  // random Weyl image so both chambers get exercised
  for (int k = 0; k < 6; ++k) {
    w = reflect(w, rs.simple_roots[rng.uniform_int(0, rs.rank - 1)]);
  }
  return w;
}

}  // namespace

TEST_CASE("B2 positive roots match the table") {
  auto rs = RS(Family::B, 2);
  CHECK(as_set(rs.positive_roots) ==
        std::set<Weight>{W("1,0"), W("0,1"), W("1,-1"), W("1,1")});
  CHECK(rs.simple_roots == std::vector<Weight>{W("1,-1"), W("0,1")});
}

TEST_CASE("D4 simple roots match the table") {
  auto rs = RS(Family::D, 4);
  CHECK(rs.simple_roots == std::vector<Weight>{W("1,-1,0,0"), W("0,1,-1,0"),
                                               W("0,0,1,-1"), W("0,0,1,1")});
  CHECK(rs.positive_roots.size() == 12);
}

TEST_CASE("A1 positive root in zero-sum coordinates") {
  auto rs = RS(Family::A, 1);
  CHECK(rs.positive_roots == std::vector<Weight>{W("1,-1")});
  CHECK(rs.fundamental_weights == std::vector<Weight>{W("1/2,-1/2")});
}

TEST_CASE("C3 long and short roots") {
  auto rs = RS(Family::C, 3);
  CHECK(rs.simple_roots.back() == W("0,0,2"));
  CHECK(std::count(rs.positive_roots.begin(), rs.positive_roots.end(), W("2,0,0")) == 1);
  CHECK(rs.positive_roots.size() == 9);
}

TEST_CASE("fundamental weights are dual to the simple coroots") {
  for (auto [f, lo, hi] : {std::tuple{Family::A, 1, 5}, {Family::B, 2, 5},
                           {Family::C, 3, 5}, {Family::D, 4, 5}}) {
    for (int n = lo; n <= hi; ++n) {
      auto rs = RS(f, n);
      for (int i = 0; i < n; ++i) {
        auto coeffs = fundamental_coefficients(rs.fundamental_weights[i], rs);
        for (int j = 0; j < n; ++j) {
          CHECK(coeffs[j] == make_rat(i == j ? 1 : 0));
        }
        CHECK(is_dominant(rs.fundamental_weights[i], rs));
      }
    }
  }
}

TEST_CASE("small ranks redirect through the classical isomorphisms") {
  auto b1 = RS(Family::B, 1);
  CHECK(b1.family == Family::A);
  CHECK(b1.rank == 1);
  REQUIRE(b1.redirect.has_value());
  CHECK(b1.redirect->from_family == Family::B);

  auto c1 = RS(Family::C, 1);
  CHECK(c1.family == Family::A);

  auto c2 = RS(Family::C, 2);
  CHECK(c2.family == Family::B);
  CHECK(c2.rank == 2);
  CHECK(c2.redirect->coeff_map == std::vector<int>{1, 0});

  auto d3 = RS(Family::D, 3);
  CHECK(d3.family == Family::A);
  CHECK(d3.rank == 3);
  CHECK(d3.redirect->coeff_map == std::vector<int>{1, 0, 2});

  CHECK_THROWS_WITH_AS(RS(Family::D, 2), doctest::Contains("A1 x A1"),
                       std::invalid_argument);
  CHECK_THROWS_AS(RS(Family::D, 1), std::invalid_argument);
  CHECK_THROWS_AS(RS(Family::A, 0), std::invalid_argument);
}

TEST_CASE("reflections") {
  CHECK(reflect(W("1,0"), W("1,-1")) == W("0,1"));
  CHECK(reflect(W("1,0"), W("1,0")) == W("-1,0"));
  CHECK(reflect(W("1/2,1/2,1/2,1/2"), W("0,0,1,1")) == W("1/2,1/2,-1/2,-1/2"));
  CHECK_THROWS_AS(reflect(W("1,0"), W("0,0")), std::invalid_argument);

  detail::SplitMix64 rng(5);
  auto rs = RS(Family::B, 3);
  for (int trial = 0; trial < 20; ++trial) {
    Weight w = random_lattice_weight(rng, rs);
    for (const auto& alpha : rs.positive_roots) {
      CHECK(reflect(reflect(w, alpha), alpha) == w);
    }
  }
}

TEST_CASE("orbits from the paper") {
  auto d4 = RS(Family::D, 4);
  auto orbit = weyl_orbit(W("1/2,1/2,1/2,1/2"), d4);
  CHECK(orbit.size() == 8);
  for (const auto& w : orbit.elements) {
    int minus = 0;
    for (const auto& c : w.coords) {
      CHECK(abs(c) == make_rat(1, 2));
      if (sgn(c) < 0) ++minus;
    }
    CHECK(minus % 2 == 0);
  }

  auto b2 = RS(Family::B, 2);
  auto spin = weyl_orbit(W("1/2,1/2"), b2);
  CHECK(spin.elements == std::set<Weight>{W("1/2,1/2"), W("1/2,-1/2"),
                                          W("-1/2,1/2"), W("-1/2,-1/2")});

  CHECK(weyl_orbit(W("0,0"), b2).elements == std::set<Weight>{W("0,0")});
}

TEST_CASE("orbit size formula, divisibility and stability") {
  detail::SplitMix64 rng(99);
  for (auto [f, n] : {std::pair{Family::A, 2}, {Family::A, 3}, {Family::B, 2},
                      {Family::B, 3}, {Family::C, 3}, {Family::D, 4}}) {
    auto rs = RS(f, n);
    Int group = weyl_group_order(rs);
    for (int trial = 0; trial < 10; ++trial) {
      Weight w = random_lattice_weight(rng, rs);
      auto orbit = weyl_orbit(w, rs);
      CHECK(weyl_orbit_size(w, rs) == static_cast<long long>(orbit.size()));
      CHECK(group % static_cast<long>(orbit.size()) == 0);
      for (const auto& x : orbit.elements) {
        for (const auto& alpha : rs.simple_roots) {
          CHECK(orbit.contains(reflect(x, alpha)));
        }
      }
    }
  }
}

TEST_CASE("dominant representatives") {
  CHECK(dominant_representative(W("-1,0"), RS(Family::B, 2)) == W("1,0"));
  CHECK(dominant_representative(W("-1/2,1/2,1/2,1/2"), RS(Family::D, 4)) ==
        W("1/2,1/2,1/2,-1/2"));
  CHECK(dominant_representative(W("0,1,-1"), RS(Family::A, 2)) == W("1,0,-1"));

  detail::SplitMix64 rng(17);
  for (auto [f, n] : {std::pair{Family::A, 3}, {Family::B, 3}, {Family::C, 3},
                      {Family::D, 4}}) {
    auto rs = RS(f, n);
    for (int trial = 0; trial < 12; ++trial) {
      Weight w = random_lattice_weight(rng, rs);
      Weight d = dominant_representative(w, rs);
      CHECK(is_dominant(d, rs));
      CHECK(weyl_orbit(w, rs).contains(d));
      CHECK(dominant_representative(d, rs) == d);
    }
  }
}

TEST_CASE("root lattice membership") {
  auto b2 = RS(Family::B, 2);
  CHECK(in_root_lattice(W("1,0"), b2));
  CHECK_FALSE(in_root_lattice(W("1/2,1/2"), b2));
  CHECK(in_root_lattice(W("0,0"), b2));

  auto c3 = RS(Family::C, 3);
  CHECK_FALSE(in_root_lattice(W("1,0,0"), c3));  // odd coordinate sum
  CHECK(in_root_lattice(W("1,1,0"), c3));

  auto a2 = RS(Family::A, 2);
  CHECK(in_root_lattice(W("1,0,-1"), a2));
  CHECK_FALSE(in_root_lattice(a2.fundamental_weights[0], a2));
}

TEST_CASE("weight lattice membership") {
  auto b2 = RS(Family::B, 2);
  CHECK(in_weight_lattice(W("1/2,1/2"), b2));
  CHECK_FALSE(in_weight_lattice(W("1/2,0"), b2));
  auto c3 = RS(Family::C, 3);
  CHECK(in_weight_lattice(W("1,0,0"), c3));
  CHECK_FALSE(in_weight_lattice(W("1/2,1/2,1/2"), c3));
}
