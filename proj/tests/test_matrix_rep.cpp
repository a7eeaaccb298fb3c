#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cayleyrep/detail/clifford.hpp"
#include "cayleyrep/exact_linalg.hpp"
#include "cayleyrep/matrix_rep.hpp"
#include "cayleyrep/weight_diagram.hpp"
#include "helpers.hpp"

using namespace cayley;
using cayley::testing::RS;
using cayley::testing::W;

namespace {

std::vector<std::string> semisimple_labels() {
  return {"sl2-sym-1",       "sl2-sym-2",        "sl2-sym-3",       "sl2-sym-4",
          "soN-standard:B2", "soN-standard:B3",  "sp2n-standard:C3", "soN-standard:D4",
          "sl4-lambda2",     "spin-so5",         "spin8-plus",      "spin8-minus"};
}

GaussRat eval(const Weight& label, const Weight& coords) {
  return GaussRat(dot(label, coords));
}

}  // namespace

TEST_CASE("sl2 symmetric powers") {
  auto d1 = build_sl2_symmetric_power(1);
  CHECK(d1.dim_v == 2);
  CHECK(d1.algebra_basis[0] ==
        ExactMatrix::identity(2) - GaussRat::integer(2) * ExactMatrix::unit(2, 1, 1));
  CHECK(d1.algebra_basis[1] == ExactMatrix::unit(2, 0, 1));
  CHECK(d1.algebra_basis[2] == ExactMatrix::unit(2, 1, 0));

  auto d2 = build_sl2_symmetric_power(2);
  for (int k = 0; k < 3; ++k) {
    CHECK(d2.algebra_basis[0].at(k, k) == GaussRat::integer(2 - 2 * k));
  }
  auto d3 = build_sl2_symmetric_power(3);
  for (int k = 0; k < 4; ++k) {
    CHECK(d3.algebra_basis[0].at(k, k) == GaussRat::integer(3 - 2 * k));
  }
  CHECK_THROWS_AS(build_sl2_symmetric_power(0), std::invalid_argument);
}

TEST_CASE("quadratic standards have the advertised dimensions") {
  auto b2 = build_quadratic_standard(Family::B, 2);
  CHECK(b2.dim_v == 5);
  CHECK(b2.algebra_dim() == 10);
  // Cartan pattern diag(a, b, 0, -b, -a)
  const auto& h0 = b2.algebra_basis[0];
  CHECK(h0.at(0, 0) == GaussRat::integer(1));
  CHECK(h0.at(2, 2).is_zero());
  CHECK(h0.at(4, 4) == GaussRat::integer(-1));

  auto c3 = build_quadratic_standard(Family::C, 3);
  CHECK(c3.dim_v == 6);
  CHECK(c3.algebra_dim() == 21);

  auto d4 = build_quadratic_standard(Family::D, 4);
  CHECK(d4.dim_v == 8);
  CHECK(d4.algebra_dim() == 28);

  CHECK_THROWS_AS(build_quadratic_standard(Family::C, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_quadratic_standard(Family::A, 2), std::invalid_argument);
}

TEST_CASE("sl4 wedge action") {
  auto rep = build_sl4_lambda2();
  CHECK(rep.dim_v == 6);
  CHECK(rep.algebra_dim() == 15);
  // diag(1,-1,0,0) acts as (0, 1, 1, -1, -1, 0) on the ordered wedge basis
  const auto& h0 = rep.algebra_basis[0];
  const int expected[6] = {0, 1, 1, -1, -1, 0};
  for (int s = 0; s < 6; ++s) {
    CHECK(h0.at(s, s) == GaussRat::integer(expected[s]));
  }
  for (const auto& b : rep.algebra_basis) {
    CHECK(b.trace().is_zero());
  }
}

TEST_CASE("clifford generators satisfy the anticommutation relations") {
  // eight generators of Cl(8) plus the chirality product
  auto gammas = detail::gamma_matrices(4);
  gammas.push_back(detail::kron(detail::kron(detail::pauli(3), detail::pauli(3)),
                                detail::kron(detail::pauli(3), detail::pauli(3))));
  const int dim = gammas.front().rows;
  for (size_t a = 0; a < gammas.size(); ++a) {
    for (size_t b = 0; b < gammas.size(); ++b) {
      ExactMatrix anti = gammas[a] * gammas[b] + gammas[b] * gammas[a];
      if (a == b) {
        CHECK(anti == GaussRat::integer(2) * ExactMatrix::identity(dim));
      } else {
        CHECK(anti.is_zero());
      }
    }
  }
  // entries stay in {0, +-1, +-i}
  for (const auto& g : gammas) {
    for (const auto& e : g.entries) {
      Rat n2 = e.norm2();
      CHECK((n2 == 0 || n2 == 1));
    }
  }
}

TEST_CASE("spin representations") {
  auto so5 = build_spin(Family::B, 2);
  CHECK(so5.dim_v == 4);
  CHECK(so5.algebra_dim() == 10);
  {
    std::set<Weight> labels(so5.weight_labels.begin(), so5.weight_labels.end());
    CHECK(labels == std::set<Weight>{W("1/2,1/2"), W("1/2,-1/2"), W("-1/2,1/2"),
                                     W("-1/2,-1/2")});
  }

  auto plus = build_spin(Family::D, 4, Chirality::plus);
  CHECK(plus.dim_v == 8);
  CHECK(plus.algebra_dim() == 28);
  std::set<Weight> plus_labels(plus.weight_labels.begin(), plus.weight_labels.end());
  CHECK(plus_labels.size() == 8);
  for (const auto& w : plus_labels) {
    int minus = 0;
    for (const auto& c : w.coords) {
      CHECK(abs(c) == make_rat(1, 2));
      if (sgn(c) < 0) ++minus;
    }
    CHECK(minus % 2 == 0);  // even parity class
  }

  auto minus = build_spin(Family::D, 4, Chirality::minus);
  std::set<Weight> minus_labels(minus.weight_labels.begin(), minus.weight_labels.end());
  CHECK(minus_labels.size() == 8);
  for (const auto& w : minus_labels) {
    int neg = 0;
    for (const auto& c : w.coords) {
      if (sgn(c) < 0) ++neg;
    }
    CHECK(neg % 2 == 1);
  }

  CHECK_THROWS_AS(build_spin(Family::B, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_spin(Family::D, 5), std::invalid_argument);
}

TEST_CASE("fixtures") {
  auto diag = build_diagonal_group_algebra(2);
  CHECK(diag.algebra_basis == std::vector<ExactMatrix>{ExactMatrix::unit(2, 0, 0),
                                                       ExactMatrix::unit(2, 1, 1)});
  auto uni = build_unipotent_upper(3);
  CHECK(uni.algebra_basis == std::vector<ExactMatrix>{ExactMatrix::unit(3, 0, 1),
                                                      ExactMatrix::unit(3, 0, 2),
                                                      ExactMatrix::unit(3, 1, 2)});
  // nilpotency: E12 E23 E12 vanishes, hence trivially in the span
  ExactMatrix prod = uni.algebra_basis[0] * uni.algebra_basis[2] * uni.algebra_basis[0];
  CHECK(prod.is_zero());
  CHECK_THROWS_AS(build_diagonal_group_algebra(1), std::invalid_argument);
  CHECK_THROWS_AS(build_unipotent_upper(1), std::invalid_argument);
}

TEST_CASE("commutator closure and dimension across the catalog") {
  for (const auto& label : catalog_labels()) {
    auto rep = build_rep(label);
    CAPTURE(label);
    SpanBasis span(rep.algebra_basis);
    CHECK(span.dimension() == static_cast<int>(rep.algebra_dim()));  // independent basis
    for (const auto& a : rep.algebra_basis) {
      for (const auto& b : rep.algebra_basis) {
        CHECK(span.contains(commutator(a, b)));
      }
    }
  }
}

TEST_CASE("cartan diagonal matches the weight labels") {
  for (const auto& label : catalog_labels()) {
    auto rep = build_rep(label);
    CAPTURE(label);
    for (size_t i = 0; i < rep.cartan_indices.size(); ++i) {
      const auto& h = rep.algebra_basis[rep.cartan_indices[i]];
      REQUIRE(h.is_diagonal());
      for (int s = 0; s < rep.dim_v; ++s) {
        CHECK(h.at(s, s) == eval(rep.weight_labels[s], rep.cartan_coords[i]));
      }
    }
  }
}

TEST_CASE("read-off weights match the weight diagram") {
  for (const auto& label : semisimple_labels()) {
    auto rep = build_rep(label);
    CAPTURE(label);
    REQUIRE(rep.family.has_value());
    auto rs = RS(*rep.family, *rep.rank);
    auto observed = weights_of_rep(rep);
    auto diagram = weight_diagram(*rep.highest, rs);
    CHECK(static_cast<long long>(observed.size()) == diagram.dimension());
    std::map<Weight, int> counts;
    for (const auto& w : observed) counts[w] += 1;
    CHECK(counts == diagram.mult);
  }
}

TEST_CASE("direct sums") {
  auto s1 = build_sl2_symmetric_power(1);
  auto s2 = build_sl2_symmetric_power(2);
  auto s3 = build_sl2_symmetric_power(3);

  auto sum11 = direct_sum(s1, s1);
  CHECK(sum11.dim_v == 4);
  CHECK(sum11.algebra_dim() == 3);
  auto sum12 = direct_sum(s1, s2);
  CHECK(sum12.dim_v == 5);
  auto sum13 = direct_sum(s1, s3);
  CHECK(sum13.dim_v == 6);

  CHECK_THROWS_AS(direct_sum(s1, build_diagonal_group_algebra(2)),
                  std::invalid_argument);
  CHECK(build_rep("sl2-sym-1+sl2-sym-2").dim_v == 5);
}

TEST_CASE("weights of rep basics") {
  auto s3 = build_sl2_symmetric_power(3);
  auto ws = weights_of_rep(s3);
  std::multiset<Weight> expected{W("3/2,-3/2"), W("1/2,-1/2"), W("-1/2,1/2"),
                                 W("-3/2,3/2")};
  CHECK(std::multiset<Weight>(ws.begin(), ws.end()) == expected);

  auto b2 = build_quadratic_standard(Family::B, 2);
  auto wb = weights_of_rep(b2);
  CHECK(std::multiset<Weight>(wb.begin(), wb.end()) ==
        std::multiset<Weight>{W("1,0"), W("0,1"), W("0,0"), W("0,-1"), W("-1,0")});

  CHECK_THROWS_AS(weights_of_rep(build_unipotent_upper(3)), std::invalid_argument);
}

TEST_CASE("label registry") {
  CHECK(build_rep("sl2-adjoint").label == "sl2-adjoint");
  CHECK(build_rep("gl-diagonal").dim_v == 2);
  CHECK(build_rep("gl-diagonal:4").dim_v == 4);
  CHECK(build_rep("unipotent-upper").dim_v == 3);
  CHECK(build_rep("standard:B3").label == "soN-standard:B3");
  CHECK_THROWS_WITH_AS(build_rep("nope"), doctest::Contains("available"),
                       std::invalid_argument);
}
