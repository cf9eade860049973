#include "reflinv/listed.hpp"

#include <algorithm>

namespace reflinv {

namespace {

MPoly x(unsigned k) { return MPoly::variable(Space::X, k); }

MPoly sq(unsigned k) { return x(k) * x(k); }

MPoly c(long long n, long long d = 1) { return MPoly::constant(Space::X, FieldElement(Rational(n, d))); }

MPoly lin(const std::array<FieldElement, 4>& a) {
  MPoly out(Space::X);
  for (unsigned k = 0; k < 4; ++k) out += x(k).scaled(a[k]);
  return out;
}

}  // namespace

MPoly quadric_q() { return sq(0) + sq(1) + sq(2) + sq(3); }

MPoly monomial_symmetric_sum(std::vector<unsigned> pattern) {
  if (pattern.size() > 4) throw std::invalid_argument("pattern longer than four");
  pattern.resize(4, 0);
  std::sort(pattern.begin(), pattern.end());
  std::vector<Term> terms;
  do {
    Monomial m;
    for (unsigned k = 0; k < 4; ++k) m.e[k] = static_cast<std::uint16_t>(pattern[k]);
    terms.push_back({m, FieldElement(1)});
  } while (std::next_permutation(pattern.begin(), pattern.end()));
  return MPoly::from_terms(Space::X, std::move(terms));
}

MPoly listed_F6() {
  MPoly p = monomial_symmetric_sum({6});
  p += c(5) * sq(0) * sq(1) * (sq(0) + sq(1));
  p += c(5) * sq(1) * sq(3) * (sq(1) + sq(3));
  p += c(5) * sq(1) * sq(2) * (sq(1) + sq(2));
  p += c(6) * sq(0) * sq(2) * (sq(0) + sq(2));
  p += c(6) * sq(0) * sq(3) * (sq(0) + sq(3));
  p += c(6) * sq(3) * sq(2) * (sq(2) + sq(3));
  p += c(2) * sq(0) * sq(2) * sq(3);
  return p;
}

MPoly listed_F8() {
  auto m = monomial_symmetric_sum;
  return c(3) * m({8}) + c(12) * m({6, 2}) + c(30) * m({4, 4}) + c(24) * m({4, 2, 2}) + c(144) * m({2, 2, 2, 2});
}

MPoly listed_F12(F12Variant v) {
  auto m = monomial_symmetric_sum;
  MPoly p = c(123, 8) * m({12}) + c(231, 4) * m({10, 2}) + c(21, 8) * m({8, 4}) - c(255, 2) * m({6, 6});
  p += (v == F12Variant::Display ? c(949, 2) : c(1899, 4)) * m({8, 2, 2});
  p += c(1839, 2) * m({6, 4, 2}) + c(6111, 4) * m({4, 4, 4}) + c(1809) * m({6, 2, 2, 2}) + c(7281, 2) * m({4, 4, 2, 2});
  return p;
}

MPoly listed_product(const std::string& name) {
  const FieldElement i = FieldElement::i();
  const FieldElement a = (FieldElement(1) + i * FieldElement::sqrt3()).scaled(Rational(1, 2));
  const FieldElement b = (FieldElement(1) - i * FieldElement::sqrt3()).scaled(Rational(1, 2));
  const FieldElement cc = i * FieldElement::sqrt2();
  std::vector<std::array<FieldElement, 4>> forms;
  if (name == "T6") {
    forms = {{0, 0, 1, -i}, {0, 1, 0, i}, {0, 0, 1, i}, {0, 1, -i, 0}, {0, 1, 0, -i}, {0, 1, i, 0}};
  } else if (name == "O8") {
    forms = {{0, 1, a, -b}, {0, 1, b, -a}, {0, 1, -a, -b}, {0, 1, -b, -a},
             {0, b, 1, -a}, {0, a, 1, -b}, {0, -b, 1, a}, {0, -a, 1, b}};
  } else if (name == "O12") {
    forms = {{0, -1, cc, 1}, {0, -1, -cc, 1}, {0, -cc, 1, 1}, {0, cc, 1, 1},
             {0, cc, -1, 1}, {0, -cc, -1, 1}, {0, 1, 1, cc}, {0, 1, 1, -cc},
             {0, 1, -cc, 1}, {0, 1, cc, 1}, {0, 1, -1, cc}, {0, 1, -1, -cc}};
  } else {
    throw UnknownName(name);
  }
  MPoly p = MPoly::constant(Space::X, FieldElement(1));
  for (const auto& f : forms) p *= lin(f);
  return p;
}

Point4 point_p1() { return {FieldElement::i() * FieldElement::sqrt2(), 1, 1, 0}; }

Point4 point_p2() { return {1, FieldElement::i(), 0, 0}; }

}  // namespace reflinv
