#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "reflinv/rational.hpp"

namespace reflinv {

/**
 * Element of K = Q(i, sqrt2, sqrt3, sqrt5), stored as 16 rational coordinates
 * over the basis of products of the generators.
 *
 * Basis index bits: bit 0 = i, bit 1 = sqrt2, bit 2 = sqrt3, bit 3 = sqrt5.
 * The product of two basis elements e_a * e_b equals c * e_{a xor b}, where c
 * is the product of the squares (-1, 2, 3, 5) of the shared generators.
 *
 * Text form: a sum of terms "<rational>*<symbol>" with symbols built from
 * i, r2, r3, r5, e.g. "1/2 + 1/2*i*r3". Unit coefficients are omitted.
 */
class FieldElement {
 public:
  static constexpr unsigned kDim = 16;
  static constexpr unsigned kImagBit = 1;

  FieldElement() = default;
  FieldElement(const Rational& r);  // NOLINT(google-explicit-constructor)
  FieldElement(long long n) : FieldElement(Rational(n)) {}  // NOLINT(google-explicit-constructor)

  static FieldElement basis(unsigned index);
  static FieldElement i() { return basis(1); }
  static FieldElement sqrt2() { return basis(2); }
  static FieldElement sqrt3() { return basis(4); }
  static FieldElement sqrt5() { return basis(8); }
  /// Golden ratio (1 + sqrt5) / 2.
  static FieldElement tau();
  /// exp(2 pi i k / n); n must divide 24.
  static FieldElement root_of_unity(int n, int k);
  static FieldElement parse(std::string_view text);

  const Rational& coord(unsigned index) const { return coords_[index]; }
  void set_coord(unsigned index, Rational value);
  /// Bit mask of the nonzero coordinates.
  std::uint16_t support() const noexcept { return support_; }

  bool is_zero() const noexcept { return support_ == 0; }
  bool is_one() const noexcept { return support_ == 1 && coords_[0].is_one(); }
  bool is_rational() const noexcept { return (support_ & ~1u) == 0; }
  /// True when every coordinate carrying i vanishes.
  bool is_real() const noexcept { return (support_ & 0xAAAAu) == 0; }

  /// Complex conjugation: negates the coordinates whose basis product contains i.
  FieldElement conj() const { return galois(kImagBit); }
  /// Field automorphism negating each generator whose bit is set in `generators`.
  FieldElement galois(unsigned generators) const;
  FieldElement inverse() const;
  void negate() noexcept;

  std::string str() const;

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs) { return *this *= rhs.inverse(); }
  /// this += a * b.
  void add_product(const FieldElement& a, const FieldElement& b);
  /// this += r * a for rational r.
  void add_scaled(const Rational& r, const FieldElement& a);
  FieldElement scaled(const Rational& r) const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator-(FieldElement a) {
    a.negate();
    return a;
  }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  std::array<Rational, kDim> coords_{};
  std::uint16_t support_ = 0;
};

/// Product of the generator squares shared by two basis indices.
long long basis_product_factor(unsigned shared_bits) noexcept;

/// Symbol of a basis element, e.g. "1", "i", "i*r2*r5".
std::string basis_symbol(unsigned index);

}  // namespace reflinv

template <>
struct std::hash<reflinv::FieldElement> {
  std::size_t operator()(const reflinv::FieldElement& e) const { return std::hash<std::string>()(e.str()); }
};
