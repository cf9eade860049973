#include <doctest.h>

#include <climits>

#include "helpers.hpp"
#include "reflinv/numfield.hpp"

using reflinv::FieldElement;
using reflinv::Rational;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4/2").str() == "-2");
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK_THROWS_AS(Rational(1, 0), reflinv::DivisionByZero);
  CHECK_THROWS_AS(Rational().inverse(), reflinv::DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("1/x"), reflinv::ParseError);
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational overflow promotes and demotes exactly") {
  Rational big(LLONG_MAX);
  Rational sq = big * big;
  CHECK(sq.numerator() == mpz_class("85070591730234615847396907784232501249"));
  Rational back = sq / big;
  CHECK(back == big);
  CHECK(back.str() == std::to_string(LLONG_MAX));
  Rational tiny(1, LLONG_MAX);
  CHECK((tiny * tiny * big * big).is_one());
  CHECK((Rational(LLONG_MIN) - Rational(1)).str() == "-9223372036854775809");
}

TEST_CASE("field arithmetic examples") {
  const FieldElement t = FieldElement::tau();
  CHECK(t * t == t + FieldElement(1));
  FieldElement c = FieldElement::i() * FieldElement::sqrt2();
  CHECK(c * c == FieldElement(-2));
  FieldElement a = (FieldElement(1) + FieldElement::i() * FieldElement::sqrt3()).scaled(Rational(1, 2));
  FieldElement b = (FieldElement(1) - FieldElement::i() * FieldElement::sqrt3()).scaled(Rational(1, 2));
  CHECK(a + b == FieldElement(1));
  CHECK(a * b == FieldElement(1));
}

TEST_CASE("field inverses") {
  FieldElement one_i = FieldElement(1) + FieldElement::i();
  CHECK(one_i.inverse() == (FieldElement(1) - FieldElement::i()).scaled(Rational(1, 2)));
  CHECK(FieldElement::sqrt2().inverse() == FieldElement::sqrt2().scaled(Rational(1, 2)));
  CHECK(FieldElement::tau().inverse() == FieldElement::tau() - FieldElement(1));
  CHECK_THROWS_AS(FieldElement().inverse(), reflinv::DivisionByZero);
}

TEST_CASE("complex conjugation") {
  FieldElement a = FieldElement::parse("1/2 + 1/2*i*r3");
  FieldElement b = FieldElement::parse("1/2 - 1/2*i*r3");
  CHECK(a.conj() == b);
  CHECK(FieldElement::tau().conj() == FieldElement::tau());
  FieldElement c = FieldElement::i() * FieldElement::sqrt2();
  CHECK(c.conj() == -c);
  CHECK(FieldElement::tau().is_real());
  CHECK_FALSE(c.is_real());
}

TEST_CASE("rendering and parsing round trip") {
  FieldElement a = (FieldElement(1) + FieldElement::i() * FieldElement::sqrt3()).scaled(Rational(1, 2));
  CHECK(a.str() == "1/2 + 1/2*i*r3");
  CHECK((-FieldElement::sqrt2()).str() == "-r2");
  CHECK(FieldElement().str() == "0");
  CHECK(FieldElement::parse("-3/4*r2*r5 + i") == FieldElement::parse("i - 3/4*r2*r5"));
  CHECK_THROWS_AS(FieldElement::parse("2*r7"), reflinv::ParseError);
  CHECK_THROWS_AS(FieldElement::parse(""), reflinv::ParseError);
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    FieldElement e = testing::random_element(rng);
    CHECK(FieldElement::parse(e.str()) == e);
  }
}

TEST_CASE("roots of unity of order dividing 24") {
  for (int k = 0; k < 24; ++k) {
    FieldElement z = FieldElement::root_of_unity(24, k);
    FieldElement p(1);
    for (int j = 0; j < 24; ++j) p *= z;
    CHECK(p.is_one());
    CHECK((z * z.conj()).is_one());
  }
  CHECK(FieldElement::root_of_unity(4, 1) == FieldElement::i());
  CHECK(FieldElement::root_of_unity(6, 1) == FieldElement::parse("1/2 + 1/2*i*r3"));
  CHECK_THROWS(FieldElement::root_of_unity(5, 1));
}

TEST_CASE("random field properties") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 40; ++k) {
    FieldElement x = testing::random_element(rng);
    FieldElement y = testing::random_element(rng);
    FieldElement z = testing::random_element(rng);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x * y).conj() == x.conj() * y.conj());
    for (unsigned g = 0; g < 16; ++g) CHECK((x * y).galois(g) == x.galois(g) * y.galois(g));
    if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
  }
}
