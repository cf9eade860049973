#include <doctest.h>

#include "helpers.hpp"
#include "reflinv/groups.hpp"
#include "reflinv/listed.hpp"

using namespace reflinv;

namespace {

// Number of ways to write n as a sum of parts from the list (order irrelevant).
std::vector<long> partition_counts(const std::vector<unsigned>& parts, unsigned n) {
  std::vector<long> ways(n + 1, 0);
  ways[0] = 1;
  for (unsigned p : parts) {
    for (unsigned k = p; k <= n; ++k) ways[k] += ways[k - p];
  }
  return ways;
}

}  // namespace

TEST_CASE("generator sets") {
  auto g6 = builtin_generators("G6");
  REQUIRE(g6.size() == 4);
  CHECK(g6[0] == named_matrix(NamedMatrix::Q2Left));
  CHECK(g6[3] == named_matrix(NamedMatrix::P3Right));
  auto f4 = builtin_generators("F4");
  REQUIRE(f4.size() == 6);
  CHECK(f4[4] == named_matrix(NamedMatrix::C));
  CHECK(f4[5] == named_matrix(NamedMatrix::CPrime));
  auto t1 = builtin_generators("Ttilde1");
  REQUIRE(t1.size() == 2);
  CHECK(t1[1] == named_matrix(NamedMatrix::P3Left));
  CHECK_THROWS_AS(builtin_generators("E8"), UnknownName);
  CHECK(named_matrix_label(NamedMatrix::P5Right) == "(1,p5)");
}

TEST_CASE("closure orders") {
  CHECK(builtin_group("G6").order() == 288);
  CHECK(builtin_group("G8").order() == 1152);
  CHECK(builtin_group("G12").order() == 7200);
  CHECK(builtin_group("F4").order() == 1152);
  CHECK(builtin_group("H4").order() == 14400);
  CHECK(builtin_group("Ttilde1").order() == 24);
  CHECK(builtin_group("Otilde1").order() == 48);
  CHECK(builtin_group("Itilde2").order() == 120);
  CHECK(builtin_group("H4").elements().front().matrix().is_identity());
  CHECK_THROWS_AS(group_closure(builtin_generators("G6"), 100), BoundExceeded);
}

TEST_CASE("left and right factors commute and meet in the centre") {
  const auto& l = builtin_group("Ttilde1");
  const auto& r = builtin_group("Ttilde2");
  std::size_t common = 0;
  for (const auto& a : l.elements()) {
    CHECK(a * r.elements()[5] == r.elements()[5] * a);
    if (r.contains(a)) ++common;
  }
  CHECK(common == 2);
  for (const auto& a : l.elements()) CHECK(builtin_group("G6").contains(a));
}

TEST_CASE("orthogonality is enforced") {
  CHECK_THROWS_AS(SO4Element(Matrix4::diagonal({2, 1, 1, 1})), NotOrthogonal);
  CHECK_NOTHROW(SO4Element(Matrix4::diagonal({-1, 1, 1, 1})));
}

TEST_CASE("Reynolds sums") {
  CHECK(reynolds_sum(builtin_group("G6"), quadric_q()) == quadric_q().scaled(FieldElement(288)));
  // Independent expansion oracle: the sum of the six-plane product over the 24 elements.
  MPoly expected = monomial_symmetric_sum({6}).scaled(FieldElement(2)) +
                   monomial_symmetric_sum({4, 2}).scaled(FieldElement(10));
  CHECK(reynolds_sum(builtin_group("Ttilde1"), listed_product("T6")) == expected);
  CHECK(reynolds_sum(builtin_group("Ttilde1"), listed_product("O8")) == listed_F8().scaled(FieldElement(2)));
}

TEST_CASE("factored Reynolds sums match the plain sum") {
  auto f = factorize(builtin_group("F4"), builtin_group("Ttilde1"), builtin_group("Ttilde2"));
  CHECK(f.coset_reps.size() == 4);
  CHECK(f.overlap == 2);
  std::mt19937_64 rng(17);
  MPoly p = testing::random_homogeneous(rng, 4, 6);
  CHECK(reynolds_sum_factored(f, p) == reynolds_sum(builtin_group("F4"), p));
  auto h = factorize(builtin_group("H4"), builtin_group("Itilde1"), builtin_group("Itilde2"));
  CHECK(h.coset_reps.size() == 2);
  CHECK(h.overlap == 2);
  CHECK_THROWS(factorize(builtin_group("G6"), builtin_group("Itilde1"), builtin_group("Ttilde2")));
}

TEST_CASE("Molien series") {
  MatrixGroup trivial = group_closure({}, 10, "1");
  auto m = molien_series(trivial, 2);
  REQUIRE(m.coefficients.size() == 3);
  CHECK(m.coefficients[0] == Rational(1));
  CHECK(m.coefficients[1] == Rational(4));
  CHECK(m.coefficients[2] == Rational(10));
  CHECK(m.is_genuine());

  auto f4 = molien_series(builtin_group("F4"), 12);
  auto f4_parts = partition_counts({2, 6, 8, 12}, 12);
  for (unsigned n = 0; n <= 12; ++n) CHECK(f4.coefficients[n] == Rational(f4_parts[n]));

  auto h4 = molien_series(builtin_group("H4"), 12);
  auto h4_parts = partition_counts({2, 12, 20, 30}, 12);
  for (unsigned n = 0; n <= 12; ++n) CHECK(h4.coefficients[n] == Rational(h4_parts[n]));

  auto pf = product_formula_series({2, 6, 8, 12}, 32);
  auto dp = partition_counts({2, 6, 8, 12}, 32);
  for (unsigned n = 0; n <= 32; ++n) CHECK(pf[n] == Rational(dp[n]));

  auto g6 = molien_series(builtin_group("G6"), 6);
  CHECK(g6.coefficients[4] == Rational(1));
  CHECK(g6.coefficients[6] == Rational(2));
}

TEST_CASE("orbits and power sums") {
  Point4 e0{1, 0, 0, 0};
  CHECK(orbit(builtin_group("F4"), e0).size() == 24);
  CHECK(orbit(builtin_group("H4"), e0).size() == 120);
  auto pts = orbit(builtin_group("F4"), e0);
  MPoly p2 = orbit_power_sum(pts, 2);
  CHECK(p2 == quadric_q().scaled(FieldElement(6)));
  MPoly p6 = orbit_power_sum(pts, 6);
  for (const auto& g : builtin_generators("F4")) CHECK(act_with_inverse(p6, g.matrix().transpose()) == p6);
}

TEST_CASE("invariant spaces match Molien dimensions and the projection Reynolds route") {
  InvariantSpace space(builtin_group("F4"), 12);
  for (unsigned d = 0; d <= 12; ++d) {
    CHECK(Rational(static_cast<long long>(space.basis(d).size())) == space.molien().coefficients[d]);
  }
  CHECK(space.basic_degrees() == std::vector<unsigned>{2, 6, 8, 12});
  std::mt19937_64 rng(23);
  MPoly p = testing::random_homogeneous(rng, 6, 5);
  CHECK(space.reynolds(p) == reynolds_sum(builtin_group("F4"), p));
  CHECK_THROWS(space.basis(13));
}

TEST_CASE("linear algebra helpers") {
  MPoly x0 = MPoly::variable(Space::X, 0), x1 = MPoly::variable(Space::X, 1);
  CHECK(independent_subset({x0, x1, x0 + x1, x0 * x1}) == std::vector<std::size_t>{0, 1, 3});
  auto sol = solve_linear({{2, 1}, {1, 3}}, {3, 5});
  CHECK(sol[0] == FieldElement(Rational(4, 5)));
  CHECK(sol[1] == FieldElement(Rational(7, 5)));
  CHECK_THROWS_AS(solve_linear({{1, 2}, {2, 4}}, {1, 1}), SingularMatrix);
}

TEST_CASE("group text export") {
  std::string text = group_to_text(builtin_group("Ttilde1"));
  CHECK(std::count(text.begin(), text.end(), '\n') == 24 * 4 + 23);
  CHECK(text.rfind("1 , 0 , 0 , 0\n", 0) == 0);
}
