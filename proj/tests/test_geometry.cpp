#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "reflinv/klein.hpp"
#include "reflinv/listed.hpp"

using namespace reflinv;

namespace {

Point4 random_point(std::mt19937_64& rng) {
  return {testing::random_element(rng, 2), testing::random_element(rng, 2), testing::random_element(rng, 2),
          testing::random_element(rng, 2)};
}

std::set<std::string> keys(const std::vector<SO4Element>& els) {
  std::set<std::string> out;
  for (const auto& e : els) out.insert(e.key());
  return out;
}

}  // namespace

TEST_CASE("identify") {
  Mat2 id = identify({1, 0, 0, 0});
  CHECK(id[0][0].is_one());
  CHECK(id[1][1].is_one());
  CHECK(id[0][1].is_zero());
  CHECK(id[1][0].is_zero());
  Mat2 m = identify(point_p2());
  CHECK(m[0][0].is_zero());
  CHECK(m[0][1].is_zero());
  CHECK(m[1][0].is_zero());
  CHECK(m[1][1] == FieldElement(2));
  std::mt19937_64 rng(31);
  for (int k = 0; k < 20; ++k) {
    Point4 p = random_point(rng);
    Mat2 x = identify(p);
    CHECK(x[0][0] * x[1][1] - x[0][1] * x[1][0] == evaluate(quadric_q(), p));
  }
}

TEST_CASE("segre") {
  Point4 a = segre({1, 0}, {1, 0});
  CHECK(a[0] == FieldElement(Rational(1, 2)));
  CHECK(a[1] == FieldElement::i().scaled(Rational(-1, 2)));
  CHECK(a[2].is_zero());
  CHECK(a[3].is_zero());
  Point4 b = segre({0, 1}, {1, 0});
  CHECK(b[0].is_zero());
  CHECK(b[1].is_zero());
  CHECK(b[2] == FieldElement(Rational(-1, 2)));
  CHECK(b[3] == FieldElement::i().scaled(Rational(-1, 2)));
  std::mt19937_64 rng(37);
  for (int k = 0; k < 10; ++k) {
    Vec2 v{testing::random_element(rng), testing::random_element(rng)};
    Vec2 w{testing::random_element(rng), testing::random_element(rng)};
    if ((v[0].is_zero() && v[1].is_zero()) || (w[0].is_zero() && w[1].is_zero())) continue;
    CHECK(evaluate(quadric_q(), segre(v, w)).is_zero());
  }
  CHECK_THROWS(segre({0, 0}, {1, 0}));
}

TEST_CASE("binary groups and the 2:1 map") {
  CHECK(binary_group(BinaryKind::T).size() == 24);
  CHECK(binary_group(BinaryKind::O).size() == 48);
  CHECK(binary_group(BinaryKind::I).size() == 120);
  std::vector<SO4Element> image;
  for (const auto& g : binary_group(BinaryKind::T)) image.emplace_back(sigma(g, SU2Element::identity()));
  CHECK(keys(image) == keys(builtin_group("Ttilde1").elements()));
  CHECK(keys(image).size() == 24);

  const std::vector<std::tuple<Quaternion, NamedMatrix, NamedMatrix>> pairs{
      {quaternion_q2(), NamedMatrix::Q2Left, NamedMatrix::Q2Right},
      {quaternion_p3(), NamedMatrix::P3Left, NamedMatrix::P3Right},
      {quaternion_p4(), NamedMatrix::P4Left, NamedMatrix::P4Right},
      {quaternion_p5(), NamedMatrix::P5Left, NamedMatrix::P5Right}};
  for (const auto& [q, left, right] : pairs) {
    SU2Element g = SU2Element::from_quaternion(q);
    CHECK(sigma(g, SU2Element::identity()) == named_matrix(left).matrix());
    CHECK(sigma(SU2Element::identity(), g) == named_matrix(right).matrix());
  }
  CHECK_THROWS_AS(SU2Element(Mat2{{{2, 0}, {0, 1}}}), NotUnitary);
}

TEST_CASE("fixed points") {
  SU2Element q2 = SU2Element::from_quaternion(quaternion_q2());
  auto lines = fixed_points(q2);
  std::set<std::string> ev{lines[0].eigenvalue.str(), lines[1].eigenvalue.str()};
  CHECK(ev == std::set<std::string>{"i", "-i"});
  for (const auto& l : lines) {
    Vec2 pv = l.source.apply(l.eigenvector);
    CHECK(pv[0] == l.eigenvalue * l.eigenvector[0]);
    CHECK(pv[1] == l.eigenvalue * l.eigenvector[1]);
    CHECK((l.eigenvalue * l.eigenvalue.conj()).is_one());
  }
  SU2Element p3 = SU2Element::from_quaternion(quaternion_p3());
  auto six = fixed_points(p3);
  std::set<std::string> ev6{six[0].eigenvalue.str(), six[1].eigenvalue.str()};
  CHECK(ev6 == std::set<std::string>{"1/2 + 1/2*i*r3", "1/2 - 1/2*i*r3"});
  CHECK_THROWS_AS(fixed_points(SU2Element::identity()), CentralElement);
  CHECK_THROWS_AS(fixed_points(SU2Element::from_quaternion(quaternion_p5())), OutsideField);
}

TEST_CASE("orbits of fixed lines") {
  auto lengths = [](BinaryKind k) {
    std::vector<std::size_t> out;
    for (const auto& o : line_orbits(k)) out.push_back(o.length);
    return out;
  };
  CHECK(lengths(BinaryKind::T) == std::vector<std::size_t>{4, 4, 6});
  CHECK(lengths(BinaryKind::O) == std::vector<std::size_t>{6, 8, 12});
  CHECK(lengths(BinaryKind::I) == std::vector<std::size_t>{12, 20, 30});
  for (const auto& o : line_orbits(BinaryKind::O)) {
    CHECK(o.points.size() == o.length);
    CHECK(o.eigenvalue.has_value());
  }
}

TEST_CASE("couple planes") {
  SU2Element qi = SU2Element::from_quaternion({0, 1, 0, 0});
  for (const auto& line : fixed_points(qi)) {
    Couple c = make_couple(line);
    CHECK(c.right.eigenvalue == c.left.eigenvalue);
    CHECK(c.right.ruling == Ruling::Second);
    MPoly plane = couple_plane(c);
    bool listed = false;
    MPoly x2 = MPoly::variable(Space::X, 2), x3 = MPoly::variable(Space::X, 3);
    for (const auto& f : {x2 - x3.scaled(FieldElement::i()), x2 + x3.scaled(FieldElement::i())}) {
      if (plane == f) listed = true;
    }
    CHECK(listed);
    for (const Vec2& w : {Vec2{1, 0}, Vec2{2, 1}, Vec2{1, 7}}) CHECK(evaluate(plane, segre(c.left.eigenvector, w)).is_zero());
    for (const Vec2& u : {Vec2{0, 1}, Vec2{3, 1}, Vec2{1, 5}}) CHECK(evaluate(plane, segre(u, c.right.eigenvector)).is_zero());
  }
}

TEST_CASE("orbit plane products match the explicit lists") {
  CHECK(proportionality(orbit_plane_product("T6"), listed_product("T6")) == std::optional(FieldElement(1)));
  CHECK(proportionality(orbit_plane_product("O8"), listed_product("O8")) == std::optional(FieldElement(1)));
  CHECK(proportionality(orbit_plane_product("O12"), listed_product("O12")) ==
        std::optional(FieldElement(Rational(1, 4))));
  CHECK_THROWS_AS(orbit_plane_product("I12"), UnknownName);
}

TEST_CASE("invariants from orbits") {
  MPoly f6 = invariant_from_orbit("F6");
  CHECK(f6 == monomial_symmetric_sum({6}) + monomial_symmetric_sum({4, 2}).scaled(FieldElement(5)));
  CHECK(invariant_from_orbit_raw("F8") == listed_F8().scaled(FieldElement(2)));
  CHECK(invariant_from_orbit_raw("F12") == listed_F12(F12Variant::Corrected).scaled(FieldElement(Rational(1, 2))));
  for (const std::string n : {"F6", "F8", "F12"}) {
    MPoly f = invariant_from_orbit_raw(n);
    CHECK(f.has_real_coefficients());
    for (const auto& g : builtin_generators("F4")) CHECK(act_with_inverse(f, g.matrix().transpose()) == f);
  }
}

TEST_CASE("lift is a right inverse of phi") {
  MPoly z0z2 = MPoly::monomial(Space::Z, Monomial{{1, 0, 1, 0}});
  CHECK(lift(z0z2) == MPoly::variable(Space::X, 0) + MPoly::variable(Space::X, 1).scaled(FieldElement::i()));
  CHECK(lift(MPoly(Space::Z)).is_zero());
  for (unsigned a = 0; a <= 2; ++a) {
    for (unsigned c = 0; c <= 2; ++c) {
      MPoly m = MPoly::monomial(Space::Z, Monomial{{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(2 - a),
                                                    static_cast<std::uint16_t>(c), static_cast<std::uint16_t>(2 - c)}});
      CHECK(phi(lift(m)) == m);
    }
  }
  MPoly bal = klein_form(KleinName::W, 1).poly * klein_form(KleinName::t, 2).poly.pow(1) *
              MPoly::monomial(Space::Z, Monomial{{0, 0, 1, 1}});
  CHECK(phi(lift(bal)) == bal);
  CHECK_THROWS_AS(lift(MPoly::monomial(Space::Z, Monomial{{2, 0, 1, 0}})), UnbalancedBidegree);
  CHECK_THROWS_AS(lift(MPoly::variable(Space::X, 0)), SpaceMismatch);
}

TEST_CASE("lift-built invariants") {
  for (const std::string n : {"F6L", "F8L", "F12L"}) {
    LiftResult r = invariant_by_lift(n);
    CHECK_FALSE(r.used_oriented);
    for (const auto& g : builtin_generators("F4")) CHECK(act_with_inverse(r.raw, g.matrix().transpose()) == r.raw);
    CHECK(r.invariant.leading().coeff.is_one());
  }
  LiftResult f6 = invariant_by_lift("F6L");
  auto lambda = proportionality(phi(f6.raw), klein_form(KleinName::t, 1).poly * klein_form(KleinName::t, 2).poly);
  REQUIRE(lambda.has_value());
  CHECK_FALSE(lambda->is_zero());

  LiftResult g12 = invariant_by_lift("G12deg12");
  for (const auto& g : builtin_generators("H4")) CHECK(act_with_inverse(g12.raw, g.matrix().transpose()) == g12.raw);
  CHECK(invariant_by_lift("G12deg12", LiftRoute::Projection).raw == g12.raw);
  CHECK_FALSE(divrem(g12.raw, quadric_q()).remainder.is_zero());
  CHECK_THROWS_AS(invariant_by_lift("G14"), UnknownName);
}
