#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace reflinv {

/// Raised by every exact division whose divisor is zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Raised when textual input does not follow the expected grammar.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Arbitrary-precision rational number, always in lowest terms with a
 * positive denominator.
 *
 * Values whose numerator and denominator both fit in a signed 64-bit word are
 * stored inline; anything larger is promoted to a heap-allocated mpq_class.
 * The representation is canonical: a value is inline if and only if it fits,
 * so structural equality is value equality.
 */
class Rational {
 public:
  Rational() noexcept = default;
  Rational(long long n) noexcept;  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);
  Rational(const Rational& other);
  Rational(Rational&& other) noexcept;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept;
  ~Rational();

  /// Parses "n" or "n/d" with optional leading sign.
  static Rational parse(std::string_view text);

  bool is_zero() const noexcept { return den_ != 0 && num_ == 0; }
  bool is_one() const noexcept { return den_ == 1 && num_ == 1; }
  bool is_integer() const;
  int sign() const noexcept;

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  std::string str() const;

  Rational inverse() const;
  Rational abs() const;
  void negate() noexcept;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  /// this += a * b without materializing the product when both are inline.
  void add_product(const Rational& a, const Rational& b);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(const Rational& lhs, const Rational& rhs);
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(Rational v) {
    v.negate();
    return v;
  }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  bool big() const noexcept { return den_ == 0; }
  const mpq_class& big_ref() const noexcept { return *big_; }
  void assign_mpq(mpq_class&& q);
  void assign_i128(__int128 n, __int128 d);  // d > 0, already reduced
  void release() noexcept;

  union {
    std::int64_t num_ = 0;
    mpq_class* big_;
  };
  std::int64_t den_ = 1;  // 0 marks a heap-backed value
};

}  // namespace reflinv
