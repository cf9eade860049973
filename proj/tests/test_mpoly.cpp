#include <doctest.h>

#include "helpers.hpp"
#include "reflinv/groups.hpp"
#include "reflinv/listed.hpp"

using namespace reflinv;

namespace {

MPoly x(unsigned k) { return MPoly::variable(Space::X, k); }

// p(A x) by expanding every monomial as a product of substituted linear forms.
MPoly substitute_oracle(const MPoly& p, const Matrix4& a) {
  std::array<MPoly, 4> rows;
  for (unsigned r = 0; r < 4; ++r) {
    rows[r] = MPoly(p.space());
    for (unsigned c = 0; c < 4; ++c) rows[r] += MPoly::variable(p.space(), c).scaled(a(r, c));
  }
  MPoly out(p.space());
  for (const auto& t : p.terms()) {
    MPoly m = MPoly::constant(p.space(), t.coeff);
    for (unsigned k = 0; k < 4; ++k) {
      for (unsigned j = 0; j < t.mono.e[k]; ++j) m *= rows[k];
    }
    out += m;
  }
  return out;
}

Matrix4 random_matrix(std::mt19937_64& rng) {
  Matrix4 m;
  for (unsigned r = 0; r < 4; ++r) {
    for (unsigned c = 0; c < 4; ++c) m(r, c) = testing::random_element(rng, 2);
  }
  return m;
}

}  // namespace

TEST_CASE("monomial order and homogeneous index") {
  Monomial a{{2, 0, 0, 0}}, b{{1, 1, 0, 0}}, c{{0, 0, 0, 3}};
  CHECK(a > b);
  CHECK(c > a);
  for (unsigned d : {0u, 1u, 5u, 12u}) {
    auto monos = HomogeneousIndex::enumerate(d);
    REQUIRE(monos.size() == HomogeneousIndex::count(d));
    for (std::size_t k = 0; k < monos.size(); ++k) {
      CHECK(HomogeneousIndex::index(monos[k]) == k);
      if (k) CHECK(monos[k - 1] > monos[k]);
    }
  }
  CHECK(HomogeneousIndex::count(30) == 5456);
}

TEST_CASE("polynomial arithmetic examples") {
  CHECK((quadric_q() * MPoly(Space::X)).is_zero());
  MPoly s = (x(0) + x(1)).pow(2);
  CHECK(s == x(0) * x(0) + (x(0) * x(1)).scaled(FieldElement(2)) + x(1) * x(1));
  MPoly t6 = listed_product("T6");
  CHECK(t6.degree() == 6);
  CHECK(t6.size() == 7);
  CHECK(t6.coefficient(Monomial{{0, 2, 2, 2}}) == FieldElement(2));
  CHECK_THROWS_AS(x(0) + MPoly::variable(Space::Z, 0), SpaceMismatch);
}

TEST_CASE("linear substitution examples") {
  for (NamedMatrix m : {NamedMatrix::Q2Left, NamedMatrix::Q2Right, NamedMatrix::P3Left, NamedMatrix::P3Right,
                        NamedMatrix::P4Left, NamedMatrix::P4Right, NamedMatrix::P5Left, NamedMatrix::P5Right,
                        NamedMatrix::C, NamedMatrix::CPrime}) {
    CHECK(substitute_linear(quadric_q(), named_matrix(m).matrix()) == quadric_q());
  }
  Matrix4 cprime = named_matrix(NamedMatrix::CPrime).matrix();
  CHECK(substitute_linear(listed_F6(), cprime) == listed_F6());
  CHECK(substitute_linear(x(0), named_matrix(NamedMatrix::C).matrix()) == x(0));
  CHECK(substitute_linear(x(1), named_matrix(NamedMatrix::C).matrix()) == -x(1));
  Matrix4 singular;
  CHECK_THROWS_AS(substitute_linear(x(0), singular), SingularMatrix);
}

TEST_CASE("substitution agrees with the brute-force expansion oracle") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 12; ++k) {
    unsigned d = 1 + static_cast<unsigned>(k % 6);
    MPoly p = testing::random_homogeneous(rng, d, 6) + testing::random_homogeneous(rng, d > 1 ? d - 1 : 1, 3);
    Matrix4 a = random_matrix(rng);
    CHECK(substitute_matrix(p, a) == substitute_oracle(p, a));
  }
  // Permutation and zero-pivot matrices exercise the row relabelling path.
  Matrix4 perm = Matrix4::from_rows({{{0, 0, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}}});
  MPoly p = testing::random_homogeneous(rng, 5, 10);
  CHECK(substitute_matrix(p, perm) == substitute_oracle(p, perm));
  Matrix4 p5 = named_matrix(NamedMatrix::P5Left).matrix();
  MPoly h = testing::random_homogeneous(rng, 8, 20);
  CHECK(substitute_matrix(h, p5) == substitute_oracle(h, p5));
  CHECK(substitute_linear(substitute_linear(h, p5), p5.inverse()) == h);
}

TEST_CASE("evaluation at the listed points") {
  CHECK(evaluate(quadric_q(), point_p1()).is_zero());
  CHECK(evaluate(quadric_q(), point_p2()).is_zero());
  CHECK(evaluate(listed_F6(), point_p1()) == FieldElement(26));
  CHECK(evaluate(listed_F8(), point_p2()) == FieldElement(12));
  CHECK(evaluate(listed_F6(), point_p2()).is_zero());
  // Value forced by the listed display; independent expansion gives 48.
  CHECK(evaluate(listed_F12(), point_p2()) == FieldElement(48));
}

TEST_CASE("partial derivatives") {
  CHECK(partial(quadric_q(), 0) == x(0).scaled(FieldElement(2)));
  CHECK(partial(x(1).pow(3) * x(2), 1) == (x(1).pow(2) * x(2)).scaled(FieldElement(3)));
  CHECK(evaluate(partial(listed_F6(), 0), point_p2()) == FieldElement(-4));
  CHECK(partial(MPoly::constant(Space::X, FieldElement(5)), 2).is_zero());
}

TEST_CASE("division with remainder") {
  DivRem dr = divrem(quadric_q() * x(0), quadric_q());
  CHECK(dr.quotient == x(0));
  CHECK(dr.remainder.is_zero());
  CHECK_FALSE(divrem(listed_F6(), quadric_q()).remainder.is_zero());
  CHECK_FALSE(divrem(listed_F12(), listed_F6()).remainder.is_zero());
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10; ++k) {
    MPoly a = testing::random_homogeneous(rng, 4, 8);
    MPoly d = testing::random_homogeneous(rng, 2, 3);
    DivRem r = divrem(a, d);
    CHECK(r.quotient * d + r.remainder == a);
  }
  CHECK_THROWS_AS(divrem(x(0), MPoly(Space::X)), DivisionByZero);
}

TEST_CASE("Fischer pairing is invariant under orthogonal substitution") {
  std::mt19937_64 rng(9);
  MPoly p = testing::random_homogeneous(rng, 4, 10);
  MPoly r = testing::random_homogeneous(rng, 4, 10);
  Matrix4 g = named_matrix(NamedMatrix::P5Right).matrix();
  CHECK(fischer_pairing(substitute_linear(p, g), substitute_linear(r, g)) == fischer_pairing(p, r));
  CHECK(fischer_pairing(x(0).pow(2), x(0).pow(2)) == FieldElement(2));
}

TEST_CASE("text and json round trip") {
  std::mt19937_64 rng(3);
  MPoly p = testing::random_homogeneous(rng, 6, 15) + MPoly::constant(Space::X, FieldElement::tau());
  CHECK(parse_text(to_text(p), Space::X) == p);
  CHECK(from_json(to_json(p)) == p);
  MPoly z = testing::random_homogeneous(rng, 3, 4, Space::Z);
  CHECK(from_json(to_json(z)) == z);
  CHECK(to_json(z)["space"] == "z");
  CHECK(to_text(x(0)) == "1 ; 1 0 0 0\n");
  CHECK_THROWS_AS(parse_text("1 ; 1 0 0\n", Space::X), ParseError);
}

TEST_CASE("matrix inverse and determinant") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 5; ++k) {
    Matrix4 a = random_matrix(rng);
    if (a.determinant().is_zero()) continue;
    CHECK((a * a.inverse()).is_identity());
  }
  CHECK(named_matrix(NamedMatrix::C).determinant() == FieldElement(-1));
  CHECK(named_matrix(NamedMatrix::P5Left).determinant() == FieldElement(1));
}
