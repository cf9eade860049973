#pragma once

#include <string>
#include <vector>

#include "reflinv/groups.hpp"

namespace reflinv {

/// x0^2 + x1^2 + x2^2 + x3^2
MPoly quadric_q();

/// Sum of every distinct monomial whose exponents are a permutation of the pattern (padded with zeros).
MPoly monomial_symmetric_sum(std::vector<unsigned> pattern);

MPoly listed_F6();
MPoly listed_F8();

enum class F12Variant {
  Display,    // coefficients as printed, with -255/2 on x_i^6 x_j^6
  Corrected,  // x_i^8 x_j^2 x_k^2 coefficient 1899/4 instead of 949/2
};
MPoly listed_F12(F12Variant v = F12Variant::Display);

/// The explicit plane-form products T6, O8, O12.
MPoly listed_product(const std::string& name);

/// (i*sqrt2, 1, 1, 0) and (1, i, 0, 0); both lie on q = 0.
Point4 point_p1();
Point4 point_p2();

}  // namespace reflinv
