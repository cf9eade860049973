#include "reflinv/numfield.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace reflinv {

namespace {

constexpr std::array<long long, 4> kGeneratorSquares{-1, 2, 3, 5};
constexpr std::array<const char*, 4> kGeneratorNames{"i", "r2", "r3", "r5"};

constexpr std::array<long long, 16> make_factor_table() {
  std::array<long long, 16> t{};
  for (unsigned m = 0; m < 16; ++m) {
    long long f = 1;
    for (unsigned b = 0; b < 4; ++b) {
      if (m & (1u << b)) f *= kGeneratorSquares[b];
    }
    t[m] = f;
  }
  return t;
}

constexpr auto kFactor = make_factor_table();

// cos(m * 15 degrees) for m = 0..6, as FieldElements.
FieldElement cos15(int m) {
  const FieldElement half(Rational(1, 2));
  const FieldElement quarter(Rational(1, 4));
  switch (m) {
    case 0: return FieldElement(1);
    case 1: return quarter * (FieldElement::basis(6) + FieldElement::sqrt2());
    case 2: return half * FieldElement::sqrt3();
    case 3: return half * FieldElement::sqrt2();
    case 4: return half;
    case 5: return quarter * (FieldElement::basis(6) - FieldElement::sqrt2());
    case 6: return FieldElement();
    default: throw std::logic_error("cos15 out of range");
  }
}

// cos(m * 15 degrees) for any integer m.
FieldElement cos_any(int m) {
  m = ((m % 24) + 24) % 24;
  if (m > 12) m = 24 - m;
  if (m <= 6) return cos15(m);
  return -cos15(12 - m);
}

}  // namespace

long long basis_product_factor(unsigned shared_bits) noexcept { return kFactor[shared_bits & 15u]; }

std::string basis_symbol(unsigned index) {
  if (index == 0) return "1";
  std::string s;
  for (unsigned b = 0; b < 4; ++b) {
    if (index & (1u << b)) {
      if (!s.empty()) s += '*';
      s += kGeneratorNames[b];
    }
  }
  return s;
}

FieldElement::FieldElement(const Rational& r) {
  if (!r.is_zero()) {
    coords_[0] = r;
    support_ = 1;
  }
}

FieldElement FieldElement::basis(unsigned index) {
  if (index >= kDim) throw std::out_of_range("basis index");
  FieldElement e;
  e.coords_[index] = Rational(1);
  e.support_ = static_cast<std::uint16_t>(1u << index);
  return e;
}

FieldElement FieldElement::tau() { return Rational(1, 2) * (FieldElement(1) + sqrt5()); }

FieldElement FieldElement::root_of_unity(int n, int k) {
  if (n <= 0 || 24 % n != 0) throw std::invalid_argument("root_of_unity: order must divide 24");
  int m = (24 / n) * k;  // angle in units of 15 degrees
  return cos_any(m) + i() * cos_any(m - 6);
}

void FieldElement::set_coord(unsigned index, Rational value) {
  if (index >= kDim) throw std::out_of_range("coordinate index");
  coords_[index] = std::move(value);
  if (coords_[index].is_zero()) {
    support_ = static_cast<std::uint16_t>(support_ & ~(1u << index));
  } else {
    support_ = static_cast<std::uint16_t>(support_ | (1u << index));
  }
}

FieldElement FieldElement::galois(unsigned generators) const {
  FieldElement r(*this);
  for (unsigned k = 0; k < kDim; ++k) {
    if ((support_ & (1u << k)) && (__builtin_popcount(k & generators) & 1)) r.coords_[k].negate();
  }
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return FieldElement(coords_[0].inverse());
  // Multiply by successive Galois conjugates until the norm lands in Q.
  FieldElement x(*this);
  FieldElement acc(1);
  for (unsigned b = 0; b < 4; ++b) {
    unsigned bit = 1u << b;
    bool present = false;
    for (unsigned k = 0; k < kDim; ++k) {
      if ((x.support_ & (1u << k)) && (k & bit)) present = true;
    }
    if (!present) continue;
    FieldElement c = x.galois(bit);
    acc *= c;
    x *= c;
  }
  if (!x.is_rational()) throw std::logic_error("norm did not reduce to a rational");
  return acc.scaled(x.coords_[0].inverse());
}

void FieldElement::negate() noexcept {
  for (unsigned k = 0; k < kDim; ++k) {
    if (support_ & (1u << k)) coords_[k].negate();
  }
}

std::string FieldElement::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (unsigned k = 0; k < kDim; ++k) {
    if (!(support_ & (1u << k))) continue;
    const Rational& c = coords_[k];
    bool neg = c.sign() < 0;
    std::string mag = c.abs().str();
    std::string term = k == 0 ? mag : (mag == "1" ? basis_symbol(k) : mag + "*" + basis_symbol(k));
    if (first) {
      out = neg ? "-" + term : term;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

namespace {

class FieldParser {
 public:
  explicit FieldParser(std::string_view text) : text_(text) {}

  FieldElement parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty field element");
    FieldElement total;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      FieldElement term = parse_term();
      if (sign < 0) term.negate();
      total += term;
      first = false;
    }
    return total;
  }

 private:
  FieldElement parse_term() {
    FieldElement value(1);
    bool any = false;
    while (true) {
      skip_ws();
      value *= parse_factor();
      any = true;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return value;
  }

  FieldElement parse_factor() {
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) ++pos_;
      return FieldElement(Rational::parse(text_.substr(start, pos_ - start)));
    }
    for (unsigned b = 0; b < 4; ++b) {
      std::string_view name(kGeneratorNames[b]);
      if (text_.substr(pos_, name.size()) == name) {
        std::size_t end = pos_ + name.size();
        if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) continue;
        pos_ = end;
        return FieldElement::basis(1u << b);
      }
    }
    fail("unknown symbol");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElement FieldElement::parse(std::string_view text) { return FieldParser(text).parse(); }

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  std::uint16_t m = rhs.support_;
  while (m) {
    unsigned k = static_cast<unsigned>(__builtin_ctz(m));
    m = static_cast<std::uint16_t>(m & (m - 1));
    coords_[k] += rhs.coords_[k];
    if (coords_[k].is_zero()) {
      support_ = static_cast<std::uint16_t>(support_ & ~(1u << k));
    } else {
      support_ = static_cast<std::uint16_t>(support_ | (1u << k));
    }
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  std::uint16_t m = rhs.support_;
  while (m) {
    unsigned k = static_cast<unsigned>(__builtin_ctz(m));
    m = static_cast<std::uint16_t>(m & (m - 1));
    coords_[k] -= rhs.coords_[k];
    if (coords_[k].is_zero()) {
      support_ = static_cast<std::uint16_t>(support_ & ~(1u << k));
    } else {
      support_ = static_cast<std::uint16_t>(support_ | (1u << k));
    }
  }
  return *this;
}

void FieldElement::add_product(const FieldElement& a, const FieldElement& b) {
  std::uint16_t ma = a.support_;
  while (ma) {
    unsigned ka = static_cast<unsigned>(__builtin_ctz(ma));
    ma = static_cast<std::uint16_t>(ma & (ma - 1));
    std::uint16_t mb = b.support_;
    while (mb) {
      unsigned kb = static_cast<unsigned>(__builtin_ctz(mb));
      mb = static_cast<std::uint16_t>(mb & (mb - 1));
      unsigned k = ka ^ kb;
      Rational p = a.coords_[ka] * b.coords_[kb];
      long long f = kFactor[ka & kb];
      if (f != 1) p *= Rational(f);
      coords_[k] += p;
      if (coords_[k].is_zero()) {
        support_ = static_cast<std::uint16_t>(support_ & ~(1u << k));
      } else {
        support_ = static_cast<std::uint16_t>(support_ | (1u << k));
      }
    }
  }
}

void FieldElement::add_scaled(const Rational& r, const FieldElement& a) {
  if (r.is_zero()) return;
  std::uint16_t m = a.support_;
  while (m) {
    unsigned k = static_cast<unsigned>(__builtin_ctz(m));
    m = static_cast<std::uint16_t>(m & (m - 1));
    coords_[k] += r * a.coords_[k];
    if (coords_[k].is_zero()) {
      support_ = static_cast<std::uint16_t>(support_ & ~(1u << k));
    } else {
      support_ = static_cast<std::uint16_t>(support_ | (1u << k));
    }
  }
}

FieldElement FieldElement::scaled(const Rational& r) const {
  if (r.is_zero()) return {};
  FieldElement out(*this);
  std::uint16_t m = support_;
  while (m) {
    unsigned k = static_cast<unsigned>(__builtin_ctz(m));
    m = static_cast<std::uint16_t>(m & (m - 1));
    out.coords_[k] *= r;
  }
  return out;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.is_rational()) return b.scaled(a.coords_[0]);
  if (b.is_rational()) return a.scaled(b.coords_[0]);
  r.add_product(a, b);
  return r;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.support_ != b.support_) return false;
  for (unsigned k = 0; k < FieldElement::kDim; ++k) {
    if ((a.support_ & (1u << k)) && !(a.coords_[k] == b.coords_[k])) return false;
  }
  return true;
}

}  // namespace reflinv
