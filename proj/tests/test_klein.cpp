#include <doctest.h>

#include "helpers.hpp"
#include "reflinv/klein.hpp"
#include "reflinv/listed.hpp"

using namespace reflinv;

namespace {

MPoly product(KleinName n) { return klein_form(n, 1).poly * klein_form(n, 2).poly; }

}  // namespace

TEST_CASE("klein forms") {
  CHECK(to_text(klein_form(KleinName::t, 1).poly) == "1 ; 5 1 0 0\n-1 ; 1 5 0 0\n");
  auto chi2 = klein_form(KleinName::chi, 2).poly;
  CHECK(chi2.degree() == 12);
  CHECK(chi2.coefficient(Monomial{{0, 0, 0, 12}}).is_one());
  CHECK(chi2.coefficient(Monomial{{0, 0, 8, 4}}) == FieldElement(-33));
  for (KleinName n : {KleinName::t, KleinName::W, KleinName::chi, KleinName::f, KleinName::H, KleinName::Tau}) {
    CHECK(klein_form(n, 1).poly.degree() == static_cast<int>(klein_degree(n)));
    CHECK(parse_klein_name(klein_name_str(n)) == n);
  }
  CHECK_THROWS_AS(parse_klein_name("g"), UnknownName);
  CHECK_THROWS(klein_form(KleinName::t, 3));
}

TEST_CASE("phi on small inputs") {
  CHECK(phi(quadric_q()).is_zero());
  MPoly x0 = MPoly::variable(Space::X, 0), x1 = MPoly::variable(Space::X, 1);
  MPoly img = phi(x0 + x1.scaled(FieldElement::i()));
  CHECK(img == MPoly::monomial(Space::Z, Monomial{{1, 0, 1, 0}}));
  CHECK_THROWS_AS(phi(MPoly::variable(Space::Z, 0)), SpaceMismatch);
}

TEST_CASE("phi of the listed forms") {
  CHECK(phi_factor(listed_F6(), product(KleinName::t)) == FieldElement(Rational(-13, 16)));
  CHECK(phi_factor(listed_F8(), product(KleinName::W)) == FieldElement(Rational(3, 64)));
  CHECK(phi_factor(listed_F12(F12Variant::Corrected), product(KleinName::chi)) == FieldElement(Rational(3, 256)));
  CHECK_THROWS_AS(phi_factor(listed_F12(F12Variant::Display), product(KleinName::chi)), NoSuchScalar);
  CHECK_THROWS_AS(phi_factor(quadric_q() * MPoly::variable(Space::X, 0).pow(4), product(KleinName::t)), ZeroImage);
}

TEST_CASE("phi is a ring homomorphism") {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 8; ++k) {
    MPoly a = testing::random_homogeneous(rng, 2, 3);
    MPoly b = testing::random_homogeneous(rng, 3, 3);
    CHECK(phi(a * b) == phi(a) * phi(b));
    MPoly c = testing::random_homogeneous(rng, 2, 3);
    CHECK(phi(a + c) == phi(a) + phi(c));
  }
}

TEST_CASE("phi intertwines the two actions") {
  std::mt19937_64 rng(59);
  MPoly p = testing::random_homogeneous(rng, 3, 6);
  SU2Element one = SU2Element::identity();
  for (const auto& q : {quaternion_q2(), quaternion_p3(), quaternion_p4(), quaternion_p5()}) {
    SU2Element g = SU2Element::from_quaternion(q);
    for (const auto& [g1, g2] : {std::pair{g, one}, std::pair{one, g}, std::pair{g, g}}) {
      MPoly moved = act_with_inverse(p, sigma(g1, g2).transpose());
      CHECK(phi(moved) == z_action(phi(p), g1, g2));
    }
  }
}

TEST_CASE("syzygies") {
  for (unsigned slot : {1u, 2u}) {
    CHECK(verify_syzygy(SyzygyKind::Tetrahedral, slot).is_zero());
    CHECK(verify_syzygy(SyzygyKind::Icosahedral, slot).is_zero());
  }
  CHECK(no_relation_below(SyzygyKind::Tetrahedral, 24));
  CHECK_FALSE(no_relation_below(SyzygyKind::Tetrahedral, 25));
  CHECK(no_relation_below(SyzygyKind::Icosahedral, 60));
  CHECK_FALSE(no_relation_below(SyzygyKind::Icosahedral, 61));
}

TEST_CASE("invariance of the forms under the binary groups") {
  const auto& t = binary_group(BinaryKind::T);
  for (KleinName n : {KleinName::t, KleinName::W, KleinName::chi}) {
    CHECK_FALSE(first_non_fixing(klein_form(n, 1).poly, t, 1).has_value());
  }
  const auto& i = binary_group(BinaryKind::I);
  CHECK(first_non_fixing(klein_form(KleinName::f, 1).poly, i, 1).has_value());
  MPoly oriented = oriented_icosahedral_form(KleinName::f, 1);
  CHECK(oriented.degree() == 12);
  CHECK_FALSE(first_non_fixing(oriented, i, 1).has_value());
  CHECK_FALSE(proportionality(oriented, klein_form(KleinName::f, 1).poly).has_value());
}

TEST_CASE("proportionality") {
  MPoly t = klein_form(KleinName::t, 1).poly;
  CHECK(proportionality(t.scaled(FieldElement(3)), t) == std::optional(FieldElement(3)));
  CHECK_FALSE(proportionality(t + klein_form(KleinName::t, 2).poly, t).has_value());
  CHECK(proportionality(MPoly(Space::Z), t) == std::optional(FieldElement()));
}
