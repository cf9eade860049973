#include "reflinv/rational.hpp"

#include <climits>
#include <utility>

namespace reflinv {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) noexcept {
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

int ctz128(u128 v) noexcept {
  auto lo = static_cast<std::uint64_t>(v);
  if (lo != 0) return __builtin_ctzll(lo);
  return 64 + __builtin_ctzll(static_cast<std::uint64_t>(v >> 64));
}

u128 gcd128(u128 a, u128 b) noexcept {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return gcd64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = ctz128(a | b);
  a >>= ctz128(a);
  do {
    b >>= ctz128(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

u128 abs128(i128 v) noexcept { return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v); }

bool fits64(i128 v) noexcept { return v > static_cast<i128>(INT64_MIN) && v <= static_cast<i128>(INT64_MAX); }

mpz_class mpz_from_i128(i128 v) {
  u128 u = abs128(v);
  mpz_class r(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  r <<= 64;
  r += static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  if (v < 0) r = -r;
  return r;
}

}  // namespace

Rational::Rational(long long n) noexcept {
  if (n == LLONG_MIN) {
    den_ = 1;
    assign_mpq(mpq_class(mpz_from_i128(n)));
    return;
  }
  num_ = n;
  den_ = 1;
}

Rational::Rational(long long n, long long d) {
  if (d == 0) throw DivisionByZero();
  i128 nn = n, dd = d;
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  auto g = static_cast<i128>(gcd128(abs128(nn), static_cast<u128>(dd)));
  assign_i128(nn / g, dd / g);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  if (c.get_den() == 0) throw DivisionByZero();
  assign_mpq(std::move(c));
}

Rational::Rational(const Rational& other) : den_(other.den_) {
  if (other.big()) {
    big_ = new mpq_class(*other.big_);
  } else {
    num_ = other.num_;
  }
}

Rational::Rational(Rational&& other) noexcept : den_(other.den_) {
  if (other.big()) {
    big_ = other.big_;
    other.den_ = 1;
    other.num_ = 0;
  } else {
    num_ = other.num_;
  }
}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  if (other.big()) {
    if (big()) {
      *big_ = *other.big_;
    } else {
      big_ = new mpq_class(*other.big_);
      den_ = 0;
    }
  } else {
    release();
    num_ = other.num_;
    den_ = other.den_;
  }
  return *this;
}

Rational& Rational::operator=(Rational&& other) noexcept {
  if (this == &other) return *this;
  release();
  den_ = other.den_;
  if (other.big()) {
    big_ = other.big_;
    other.den_ = 1;
    other.num_ = 0;
  } else {
    num_ = other.num_;
  }
  return *this;
}

Rational::~Rational() { release(); }

void Rational::release() noexcept {
  if (big()) {
    delete big_;
    num_ = 0;
    den_ = 1;
  }
}

void Rational::assign_mpq(mpq_class&& q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != LONG_MIN) {
    long nv = n.get_si();
    long dv = d.get_si();
    release();
    num_ = nv;
    den_ = dv;
    return;
  }
  if (big()) {
    *big_ = std::move(q);
  } else {
    big_ = new mpq_class(std::move(q));
    den_ = 0;
  }
}

void Rational::assign_i128(i128 n, i128 d) {
  if (fits64(n) && fits64(d)) {
    release();
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    return;
  }
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  assign_mpq(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t') continue;
    if (!(ch == '-' || ch == '+' || ch == '/' || (ch >= '0' && ch <= '9'))) {
      throw ParseError("invalid rational: '" + std::string(text) + "'");
    }
    s.push_back(ch);
  }
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  if (s.empty()) throw ParseError("empty rational");
  auto slash = s.find('/');
  auto valid_int = [](std::string_view v) {
    if (!v.empty() && v.front() == '-') v.remove_prefix(1);
    if (v.empty()) return false;
    for (char ch : v) {
      if (ch < '0' || ch > '9') return false;
    }
    return true;
  };
  std::string_view whole(s);
  if (slash == std::string::npos) {
    if (!valid_int(whole)) throw ParseError("invalid rational: '" + s + "'");
  } else {
    auto num = whole.substr(0, slash);
    auto den = whole.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-') {
      throw ParseError("invalid rational: '" + s + "'");
    }
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("invalid rational: '" + s + "'");
  if (q.get_den() == 0) throw DivisionByZero();
  return Rational(q);
}

bool Rational::is_integer() const { return big() ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
  if (big()) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big()) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const { return big() ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }

mpz_class Rational::denominator() const { return big() ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_)); }

std::string Rational::str() const {
  if (big()) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (big()) {
    mpq_class q;
    mpq_inv(q.get_mpq_t(), big_->get_mpq_t());
    return Rational(q);
  }
  Rational r;
  if (num_ < 0) {
    r.num_ = -den_;
    r.den_ = -num_;
  } else {
    r.num_ = den_;
    r.den_ = num_;
  }
  return r;
}

Rational Rational::abs() const {
  Rational r(*this);
  if (r.sign() < 0) r.negate();
  return r;
}

void Rational::negate() noexcept {
  if (big()) {
    mpq_neg(big_->get_mpq_t(), big_->get_mpq_t());
  } else {
    num_ = -num_;
  }
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big() && !rhs.big()) {
    if (rhs.num_ == 0) return *this;
    if (num_ == 0) return *this = rhs;
    if (den_ == rhs.den_) {
      i128 n = static_cast<i128>(num_) + rhs.num_;
      auto g = static_cast<i128>(gcd128(abs128(n), static_cast<u128>(den_)));
      assign_i128(n / g, den_ / g);
      return *this;
    }
    auto g = static_cast<i128>(gcd64(static_cast<std::uint64_t>(den_), static_cast<std::uint64_t>(rhs.den_)));
    i128 t = static_cast<i128>(num_) * (rhs.den_ / g) + static_cast<i128>(rhs.num_) * (den_ / g);
    auto g2 = static_cast<i128>(gcd128(abs128(t), static_cast<u128>(g)));
    i128 d = static_cast<i128>(den_ / g) * (rhs.den_ / g2);
    assign_i128(t / g2, d);
    return *this;
  }
  mpq_class q = to_mpq();
  q += rhs.to_mpq();
  assign_mpq(std::move(q));
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (!rhs.big()) {
    Rational neg(rhs);
    neg.negate();
    return *this += neg;
  }
  mpq_class q = to_mpq();
  q -= rhs.to_mpq();
  assign_mpq(std::move(q));
  return *this;
}

Rational operator*(const Rational& lhs, const Rational& rhs) {
  Rational r;
  if (!lhs.big() && !rhs.big()) {
    if (lhs.num_ == 0 || rhs.num_ == 0) return r;
    auto g1 = static_cast<std::int64_t>(gcd64(static_cast<std::uint64_t>(lhs.num_ < 0 ? -lhs.num_ : lhs.num_),
                                              static_cast<std::uint64_t>(rhs.den_)));
    auto g2 = static_cast<std::int64_t>(gcd64(static_cast<std::uint64_t>(rhs.num_ < 0 ? -rhs.num_ : rhs.num_),
                                              static_cast<std::uint64_t>(lhs.den_)));
    i128 n = static_cast<i128>(lhs.num_ / g1) * (rhs.num_ / g2);
    i128 d = static_cast<i128>(lhs.den_ / g2) * (rhs.den_ / g1);
    r.assign_i128(n, d);
    return r;
  }
  if (lhs.is_zero() || rhs.is_zero()) return r;
  mpq_class q = lhs.to_mpq();
  q *= rhs.to_mpq();
  r.assign_mpq(std::move(q));
  return r;
}

Rational& Rational::operator*=(const Rational& rhs) { return *this = *this * rhs; }

Rational& Rational::operator/=(const Rational& rhs) { return *this *= rhs.inverse(); }

void Rational::add_product(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  *this += a * b;
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.big() != b.big()) return false;
  if (a.big()) return *a.big_ == *b.big_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big() && !b.big()) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

}  // namespace reflinv
