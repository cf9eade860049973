#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "reflinv/numfield.hpp"

namespace reflinv {

/// Which four variables a polynomial is written in: x0..x3 on P3 or z0..z3 on P1 x P1.
enum class Space : std::uint8_t { X, Z };

std::string_view space_name(Space s);
Space parse_space(std::string_view name);

class SpaceMismatch : public std::invalid_argument {
 public:
  SpaceMismatch() : std::invalid_argument("polynomial space tags differ") {}
};

class SingularMatrix : public std::domain_error {
 public:
  SingularMatrix() : std::domain_error("matrix is singular") {}
};

/// Exponent vector in four variables, ordered graded-lex with variable 0 largest.
struct Monomial {
  std::array<std::uint16_t, 4> e{};

  unsigned degree() const noexcept { return unsigned{e[0]} + e[1] + e[2] + e[3]; }
  bool divides(const Monomial& other) const noexcept;
  Monomial operator*(const Monomial& other) const noexcept;
  /// Exponent-wise difference; requires divides(other) in reverse.
  Monomial operator/(const Monomial& other) const noexcept;
  std::uint64_t key() const noexcept;
  static Monomial from_key(std::uint64_t k) noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded lex: higher total degree is greater, ties broken by x0, then x1, ...
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;
};

struct Term {
  Monomial mono;
  FieldElement coeff;
};

/**
 * Dense indexing of the degree-n monomials in four variables.
 *
 * Index 0 is x0^n and indices increase in graded-lex descending order, so a
 * dense coefficient array is already in canonical term order.
 */
struct HomogeneousIndex {
  static std::size_t count(unsigned degree) noexcept;
  static std::size_t index(const Monomial& m) noexcept;
  /// All monomials of the given degree in index order.
  static std::vector<Monomial> enumerate(unsigned degree);
};

/**
 * Sparse polynomial in four variables over K.
 *
 * Terms are kept sorted in graded-lex descending order with no zero
 * coefficients, so equality is term-wise comparison.
 */
class MPoly {
 public:
  explicit MPoly(Space s = Space::X) : space_(s) {}

  static MPoly constant(Space s, const FieldElement& c);
  static MPoly variable(Space s, unsigned index);
  static MPoly monomial(Space s, const Monomial& m, const FieldElement& c = FieldElement(1));
  /// Merges duplicate monomials and drops zeros.
  static MPoly from_terms(Space s, std::vector<Term> terms);
  /// Coefficients indexed by HomogeneousIndex for the given degree.
  static MPoly from_dense(Space s, unsigned degree, std::vector<FieldElement> dense);

  Space space() const noexcept { return space_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Total degree of the leading term; -1 for the zero polynomial.
  int degree() const noexcept { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree()); }
  bool is_homogeneous() const noexcept;
  const Term& leading() const;
  FieldElement coefficient(const Monomial& m) const;
  std::vector<FieldElement> to_dense(unsigned degree) const;

  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);
  MPoly scaled(const FieldElement& c) const;
  MPoly pow(unsigned n) const;
  /// Complex conjugate of every coefficient.
  MPoly conj() const;
  bool has_real_coefficients() const noexcept;
  /// Divides by the leading coefficient; zero stays zero.
  MPoly monic() const;
  /// Same terms, relabelled space tag.
  MPoly with_space(Space s) const;

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(const MPoly& a) { return a.scaled(FieldElement(-1)); }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b);

 private:
  void check_space(const MPoly& other) const;

  Space space_;
  std::vector<Term> terms_;
};

/// 4x4 matrix over K.
struct Matrix4 {
  std::array<std::array<FieldElement, 4>, 4> m{};

  static Matrix4 identity();
  static Matrix4 diagonal(const std::array<FieldElement, 4>& d);
  static Matrix4 from_rows(const std::array<std::array<FieldElement, 4>, 4>& rows, const FieldElement& scale = FieldElement(1));

  FieldElement& operator()(unsigned r, unsigned c) { return m[r][c]; }
  const FieldElement& operator()(unsigned r, unsigned c) const { return m[r][c]; }

  Matrix4 transpose() const;
  Matrix4 inverse() const;
  FieldElement determinant() const;
  bool is_identity() const;
  /// Canonical rendering of the 16 entries row by row, separated by '|'.
  std::string key() const;

  friend Matrix4 operator*(const Matrix4& a, const Matrix4& b);
  friend std::array<FieldElement, 4> operator*(const Matrix4& a, const std::array<FieldElement, 4>& v);
  friend bool operator==(const Matrix4& a, const Matrix4& b);
};

/// p(A x): replaces each variable by the corresponding row of A applied to x.
MPoly substitute_matrix(const MPoly& p, const Matrix4& a);

/// The left action (g . p)(x) = p(g^-1 x).
MPoly substitute_linear(const MPoly& p, const Matrix4& g);

/// As substitute_linear, with g^-1 supplied by the caller.
MPoly act_with_inverse(const MPoly& p, const Matrix4& g_inverse);

FieldElement evaluate(const MPoly& p, const std::array<FieldElement, 4>& point);

MPoly partial(const MPoly& p, unsigned var);

struct DivRem {
  MPoly quotient;
  MPoly remainder;
};

/// Multivariate division by d with respect to the graded-lex leading monomial of d.
DivRem divrem(const MPoly& p, const MPoly& d);

/// Bilinear pairing sum over monomials of e0!e1!e2!e3! * p_e * r_e; invariant under orthogonal substitution.
FieldElement fischer_pairing(const MPoly& p, const MPoly& r);

/// Canonical text: one "<coeff> ; <e0> <e1> <e2> <e3>" line per term.
std::string to_text(const MPoly& p);
MPoly parse_text(std::string_view text, Space s);

nlohmann::json to_json(const MPoly& p);
MPoly from_json(const nlohmann::json& j);

}  // namespace reflinv
