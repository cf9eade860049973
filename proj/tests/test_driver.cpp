#include <doctest.h>

#include "reflinv/driver.hpp"

using namespace reflinv;

TEST_CASE("invariance check") {
  CHECK(check_invariance(quadric_q(), builtin_generators("F4")).pass);
  CHECK(check_invariance(listed_F8(), builtin_generators("F4")).pass);
  CheckReport r = check_invariance(MPoly::variable(Space::X, 1), {named_matrix(NamedMatrix::C)});
  CHECK_FALSE(r.pass);
  CHECK(r.witness.find("-x1") != std::string::npos);
  CHECK(r.witness.find("generator #0") != std::string::npos);
}

TEST_CASE("nondivisibility check") {
  CheckReport bad = check_nondivisibility(quadric_q() * listed_F6(), quadric_q());
  CHECK_FALSE(bad.pass);
  CHECK(bad.witness.find("remainder 0") == 0);
  CheckReport good = check_nondivisibility(listed_F6(), quadric_q(), {point_p1()});
  CHECK(good.pass);
  CHECK(good.witness.find("p(pt)=26") != std::string::npos);
  CHECK_FALSE(check_nondivisibility(listed_F6(), quadric_q(), {point_p2()}).pass);
}

TEST_CASE("jacobian check") {
  MPoly q = quadric_q();
  CHECK_FALSE(check_jacobian_independence({q, q * q, MPoly::variable(Space::X, 0), MPoly::variable(Space::X, 1)}).pass);
  CHECK(check_jacobian_independence({q, invariant_from_orbit("F6"), invariant_from_orbit("F8"),
                                     invariant_from_orbit("F12")})
            .pass);
  CHECK(check_jacobian_independence({MPoly::variable(Space::X, 0), MPoly::variable(Space::X, 1),
                                     MPoly::variable(Space::X, 2), MPoly::variable(Space::X, 3)})
            .witness == "det J(1,2,3,5) = 1");
}

TEST_CASE("degree check") {
  const MatrixGroup& f4 = builtin_group("F4");
  CHECK(check_degrees(f4, {2, 6, 8, 12}).pass);
  CheckReport r = check_degrees(f4, {2, 4, 6, 8});
  CHECK_FALSE(r.pass);
  CHECK(r.witness.find("product 384") == 0);
}

TEST_CASE("suite") {
  auto names = suite_check_names(Scope::Quick);
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK(suite_check_names(Scope::Full).size() > names.size());
  CHECK(parse_scope("full") == Scope::Full);
  CHECK_THROWS(parse_scope("everything"));

  SuiteOptions opt;
  opt.filter = "syzygy";
  auto a = run_suite(opt);
  auto b = run_suite(opt);
  REQUIRE(a.size() == 4);
  CHECK(all_passed(a));
  CHECK(report_text(a, false) == report_text(b, false));
  CHECK(report_text(a, false).find("PASS syzygy.icosahedral.1") == 0);
  for (const auto& r : a) CHECK(r.criterion == 5);

  nlohmann::json j = report_json(a, false);
  CHECK(j.size() == 4);
  CHECK(j[0]["status"] == "pass");
  CHECK_FALSE(j[0].contains("seconds"));

  opt.budget_seconds = 0;
  auto none = run_suite(opt);
  CHECK_FALSE(all_passed(none));
  CHECK(none[0].witness.find("not run") == 0);
}

TEST_CASE("a perturbed invariant is caught") {
  MPoly f6 = invariant_from_orbit("F6");
  MPoly mutated = f6 + MPoly::monomial(Space::X, Monomial{{5, 1, 0, 0}});
  CHECK(check_invariance(f6, builtin_generators("F4")).pass);
  CHECK_FALSE(check_invariance(mutated, builtin_generators("F4")).pass);
}
