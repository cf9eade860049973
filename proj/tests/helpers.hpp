#pragma once

#include <random>

#include "reflinv/mpoly.hpp"

namespace testing {

inline reflinv::FieldElement random_element(std::mt19937_64& rng, unsigned max_support = 4) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), idx(0, 15), count(1, static_cast<int>(max_support));
  reflinv::FieldElement e;
  int n = count(rng);
  for (int k = 0; k < n; ++k) {
    e += reflinv::FieldElement::basis(static_cast<unsigned>(idx(rng))).scaled(reflinv::Rational(num(rng), den(rng)));
  }
  return e;
}

inline reflinv::MPoly random_homogeneous(std::mt19937_64& rng, unsigned degree, unsigned terms,
                                         reflinv::Space s = reflinv::Space::X) {
  std::vector<reflinv::Term> out;
  auto monos = reflinv::HomogeneousIndex::enumerate(degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  for (unsigned k = 0; k < terms; ++k) out.push_back({monos[pick(rng)], random_element(rng, 2)});
  return reflinv::MPoly::from_terms(s, std::move(out));
}

}  // namespace testing
