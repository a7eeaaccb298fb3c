#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayleyrep/cayley_config.hpp"
#include "helpers.hpp"

using namespace cayley;
using cayley::testing::RS;
using cayley::testing::W;

TEST_CASE("standard representation of sl2 passes") {
  auto a1 = RS(Family::A, 1);
  auto report = is_cayley_configuration(a1.fundamental_weights[0], a1);
  CHECK(report.verdict);
  CHECK(report.orbit_size == 2);
  CHECK(report.orbit_rank == 1);
  CHECK(report.symmetric_about_origin);
  REQUIRE(report.support_minus_orbit.has_value());
  CHECK(report.support_minus_orbit->empty());
  CHECK_FALSE(report.witness.has_value());
}

TEST_CASE("third symmetric power fails with witness weight one") {
  auto a1 = RS(Family::A, 1);
  auto report = is_cayley_configuration(W("3/2,-3/2"), a1);
  CHECK_FALSE(report.verdict);
  REQUIRE(report.witness.has_value());
  CHECK(*report.witness == W("1/2,-1/2"));
}

TEST_CASE("A2 admits no configuration in the window") {
  auto a2 = RS(Family::A, 2);
  for (int c1 = 0; c1 <= 3; ++c1) {
    for (int c2 = 0; c2 <= 3; ++c2) {
      if (c1 == 0 && c2 == 0) continue;
      Weight h = weight_from_fundamental({make_rat(c1), make_rat(c2)}, a2);
      CAPTURE(c1, c2);
      CHECK_FALSE(is_cayley_configuration(h, a2).verdict);
    }
  }
}

TEST_CASE("C3 and D4 highlights") {
  auto c3 = RS(Family::C, 3);
  CHECK(is_cayley_configuration(W("1,0,0"), c3).verdict);
  CHECK_FALSE(is_cayley_configuration(W("1,1,0"), c3).verdict);

  auto d4 = RS(Family::D, 4);
  auto spin = is_cayley_configuration(W("1/2,1/2,1/2,1/2"), d4);
  CHECK(spin.verdict);
  CHECK(spin.orbit_size == 8);
}

TEST_CASE("zero and non-dominant weights are rejected") {
  auto b2 = RS(Family::B, 2);
  CHECK_THROWS_AS(is_cayley_configuration(W("0,0"), b2), std::invalid_argument);
  CHECK_THROWS_AS(is_cayley_configuration(W("0,1"), b2), std::invalid_argument);
}

TEST_CASE("cartan cube closure") {
  auto b2 = RS(Family::B, 2);
  CHECK(cartan_cube_closure(weight_set(W("1,0"), b2), 2));

  auto a1 = RS(Family::A, 1);
  CHECK_FALSE(cartan_cube_closure(weight_set(W("3/2,-3/2"), a1), 1));

  CHECK(cartan_cube_closure({Weight::zero(3)}, 3));  // vacuous
  // rank deficit: two weights on one line cannot span rank 2
  CHECK_FALSE(cartan_cube_closure({W("1,0"), W("-1,0"), W("0,0")}, 2));
}

TEST_CASE("verdict implies the cube-closure condition") {
  for (auto [f, n] : {std::pair{Family::A, 1}, {Family::B, 2}, {Family::C, 3},
                      {Family::D, 4}}) {
    auto rs = RS(f, n);
    std::vector<Rat> coeffs(n);
    for (int mask = 1; mask < 1 << n; ++mask) {
      for (int i = 0; i < n; ++i) coeffs[i] = make_rat((mask >> i) & 1);
      Weight h = weight_from_fundamental(coeffs, rs);
      auto report = is_cayley_configuration(h, rs);
      if (report.verdict) {
        CHECK(cartan_cube_closure(weight_set(h, rs), n));
      }
    }
  }
}

TEST_CASE("triality-related D4 weights agree") {
  auto d4 = RS(Family::D, 4);
  for (const auto& h : {W("1,0,0,0"), W("1/2,1/2,1/2,1/2"), W("1/2,1/2,1/2,-1/2")}) {
    CAPTURE(weight_to_string(h));
    CHECK(is_cayley_configuration(h, d4).verdict);
  }
}

TEST_CASE("true verdicts have multiplicity one on the orbit and symmetric support") {
  for (auto [f, n, h] : {std::tuple{Family::B, 2, W("1/2,1/2")},
                         {Family::B, 3, W("1,0,0")},
                         {Family::D, 4, W("1/2,1/2,1/2,-1/2")}}) {
    auto rs = RS(f, n);
    auto report = is_cayley_configuration(h, rs);
    REQUIRE(report.verdict);
    auto diagram = weight_diagram(h, rs);
    for (const auto& w : weyl_orbit(h, rs).elements) {
      CHECK(diagram.multiplicity(w) == 1);
    }
    std::set<Weight> neg;
    for (const auto& [w, m] : diagram.mult) neg.insert(-w);
    CHECK(diagram.support() == neg);
  }
}

TEST_CASE("screening evidence matches the full verdict") {
  for (auto [f, n] : {std::pair{Family::B, 3}, {Family::A, 2}, {Family::D, 4}}) {
    auto rs = RS(f, n);
    std::vector<Rat> coeffs(n);
    for (int mask = 1; mask < 1 << (2 * std::min(n, 3)); ++mask) {
      for (int i = 0; i < n; ++i) coeffs[i] = make_rat(i < 3 ? (mask >> (2 * i)) & 3 : 0);
      Weight h = weight_from_fundamental(coeffs, rs);
      if (h.is_zero()) continue;
      auto full = is_cayley_configuration(h, rs, ConfigEvidence::full);
      auto screen = is_cayley_configuration(h, rs, ConfigEvidence::screening);
      CAPTURE(weight_to_string(h));
      CHECK(full.verdict == screen.verdict);
      CHECK(full.orbit_size == screen.orbit_size);
      CHECK(full.orbit_rank == screen.orbit_rank);
      CHECK(full.symmetric_about_origin == screen.symmetric_about_origin);
    }
  }
}
