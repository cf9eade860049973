#include "reflinv/mpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace reflinv {

std::string_view space_name(Space s) { return s == Space::X ? "x" : "z"; }

Space parse_space(std::string_view name) {
  if (name == "x") return Space::X;
  if (name == "z") return Space::Z;
  throw ParseError("unknown space tag '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- Monomial

bool Monomial::divides(const Monomial& other) const noexcept {
  for (unsigned k = 0; k < 4; ++k) {
    if (e[k] > other.e[k]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const noexcept {
  Monomial r;
  for (unsigned k = 0; k < 4; ++k) r.e[k] = static_cast<std::uint16_t>(e[k] + other.e[k]);
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const noexcept {
  Monomial r;
  for (unsigned k = 0; k < 4; ++k) r.e[k] = static_cast<std::uint16_t>(e[k] - other.e[k]);
  return r;
}

std::uint64_t Monomial::key() const noexcept {
  return (std::uint64_t{e[0]} << 48) | (std::uint64_t{e[1]} << 32) | (std::uint64_t{e[2]} << 16) | std::uint64_t{e[3]};
}

Monomial Monomial::from_key(std::uint64_t k) noexcept {
  Monomial m;
  m.e = {static_cast<std::uint16_t>(k >> 48), static_cast<std::uint16_t>(k >> 32), static_cast<std::uint16_t>(k >> 16),
         static_cast<std::uint16_t>(k)};
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.e <=> b.e;
}

// -------------------------------------------------------- HomogeneousIndex

namespace {

constexpr std::size_t choose2(std::size_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }
constexpr std::size_t choose3(std::size_t n) noexcept { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

}  // namespace

std::size_t HomogeneousIndex::count(unsigned degree) noexcept { return choose3(degree + 3); }

std::size_t HomogeneousIndex::index(const Monomial& m) noexcept {
  std::size_t n = m.degree();
  std::size_t rest = n - m.e[0];
  std::size_t tail = rest - m.e[1];
  return choose3(rest + 2) + choose2(tail + 1) + (tail - m.e[2]);
}

std::vector<Monomial> HomogeneousIndex::enumerate(unsigned degree) {
  std::vector<Monomial> out;
  out.reserve(count(degree));
  for (int a0 = static_cast<int>(degree); a0 >= 0; --a0) {
    for (int a1 = static_cast<int>(degree) - a0; a1 >= 0; --a1) {
      for (int a2 = static_cast<int>(degree) - a0 - a1; a2 >= 0; --a2) {
        int a3 = static_cast<int>(degree) - a0 - a1 - a2;
        Monomial m;
        m.e = {static_cast<std::uint16_t>(a0), static_cast<std::uint16_t>(a1), static_cast<std::uint16_t>(a2),
               static_cast<std::uint16_t>(a3)};
        out.push_back(m);
      }
    }
  }
  return out;
}

// ------------------------------------------------------------------- MPoly

MPoly MPoly::constant(Space s, const FieldElement& c) { return monomial(s, Monomial{}, c); }

MPoly MPoly::variable(Space s, unsigned index) {
  if (index >= 4) throw std::out_of_range("variable index");
  Monomial m;
  m.e[index] = 1;
  return monomial(s, m);
}

MPoly MPoly::monomial(Space s, const Monomial& m, const FieldElement& c) {
  MPoly p(s);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

MPoly MPoly::from_terms(Space s, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  MPoly p(s);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

MPoly MPoly::from_dense(Space s, unsigned degree, std::vector<FieldElement> dense) {
  MPoly p(s);
  if (dense.size() != HomogeneousIndex::count(degree)) throw std::invalid_argument("dense size does not match degree");
  std::size_t idx = 0;
  for (int a0 = static_cast<int>(degree); a0 >= 0; --a0) {
    for (int a1 = static_cast<int>(degree) - a0; a1 >= 0; --a1) {
      for (int a2 = static_cast<int>(degree) - a0 - a1; a2 >= 0; --a2, ++idx) {
        if (dense[idx].is_zero()) continue;
        int a3 = static_cast<int>(degree) - a0 - a1 - a2;
        Monomial m;
        m.e = {static_cast<std::uint16_t>(a0), static_cast<std::uint16_t>(a1), static_cast<std::uint16_t>(a2),
               static_cast<std::uint16_t>(a3)};
        p.terms_.push_back({m, std::move(dense[idx])});
      }
    }
  }
  return p;
}

bool MPoly::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  return terms_.front().mono.degree() == terms_.back().mono.degree();
}

const Term& MPoly::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

FieldElement MPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& v) { return t.mono > v; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return {};
}

std::vector<FieldElement> MPoly::to_dense(unsigned degree) const {
  std::vector<FieldElement> dense(HomogeneousIndex::count(degree));
  for (const auto& t : terms_) {
    if (t.mono.degree() != degree) throw std::invalid_argument("to_dense: polynomial is not homogeneous of that degree");
    dense[HomogeneousIndex::index(t.mono)] = t.coeff;
  }
  return dense;
}

void MPoly::check_space(const MPoly& other) const {
  if (space_ != other.space_) throw SpaceMismatch();
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff.negate();
    } else {
      FieldElement c = a[i].coeff;
      if (subtract) {
        c -= b[j].coeff;
      } else {
        c += b[j].coeff;
      }
      if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& rhs) {
  check_space(rhs);
  if (rhs.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  check_space(rhs);
  if (rhs.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, true);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_space(b);
  MPoly out(a.space_);
  if (a.is_zero() || b.is_zero()) return out;
  std::size_t work = a.size() * b.size();
  if (a.is_homogeneous() && b.is_homogeneous()) {
    unsigned n = static_cast<unsigned>(a.degree() + b.degree());
    std::size_t dense_size = HomogeneousIndex::count(n);
    if (work * 4 >= dense_size) {
      std::vector<FieldElement> acc(dense_size);
      for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
          acc[HomogeneousIndex::index(ta.mono * tb.mono)].add_product(ta.coeff, tb.coeff);
        }
      }
      return MPoly::from_dense(a.space_, n, std::move(acc));
    }
  }
  std::unordered_map<std::uint64_t, FieldElement> acc;
  acc.reserve(work);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      acc[(ta.mono * tb.mono).key()].add_product(ta.coeff, tb.coeff);
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [k, c] : acc) {
    if (!c.is_zero()) terms.push_back({Monomial::from_key(k), std::move(c)});
  }
  return MPoly::from_terms(a.space_, std::move(terms));
}

MPoly& MPoly::operator*=(const MPoly& rhs) { return *this = *this * rhs; }

MPoly MPoly::scaled(const FieldElement& c) const {
  MPoly out(space_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono, t.coeff * c});
  return out;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly result = constant(space_, FieldElement(1));
  MPoly base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

MPoly MPoly::conj() const {
  MPoly out(space_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono, t.coeff.conj()});
  return out;
}

bool MPoly::has_real_coefficients() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.is_real(); });
}

MPoly MPoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(terms_.front().coeff.inverse());
}

MPoly MPoly::with_space(Space s) const {
  MPoly out(*this);
  out.space_ = s;
  return out;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.space_ != b.space_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (!(a.terms_[k].mono == b.terms_[k].mono) || !(a.terms_[k].coeff == b.terms_[k].coeff)) return false;
  }
  return true;
}

// ----------------------------------------------------------------- Matrix4

Matrix4 Matrix4::identity() {
  Matrix4 r;
  for (unsigned k = 0; k < 4; ++k) r.m[k][k] = FieldElement(1);
  return r;
}

Matrix4 Matrix4::diagonal(const std::array<FieldElement, 4>& d) {
  Matrix4 r;
  for (unsigned k = 0; k < 4; ++k) r.m[k][k] = d[k];
  return r;
}

Matrix4 Matrix4::from_rows(const std::array<std::array<FieldElement, 4>, 4>& rows, const FieldElement& scale) {
  Matrix4 r;
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) r.m[i][j] = rows[i][j] * scale;
  }
  return r;
}

Matrix4 Matrix4::transpose() const {
  Matrix4 r;
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
  }
  return r;
}

Matrix4 Matrix4::inverse() const {
  Matrix4 a = *this;
  Matrix4 inv = identity();
  for (unsigned col = 0; col < 4; ++col) {
    unsigned piv = col;
    while (piv < 4 && a.m[piv][col].is_zero()) ++piv;
    if (piv == 4) throw SingularMatrix();
    std::swap(a.m[piv], a.m[col]);
    std::swap(inv.m[piv], inv.m[col]);
    FieldElement s = a.m[col][col].inverse();
    for (unsigned j = 0; j < 4; ++j) {
      a.m[col][j] *= s;
      inv.m[col][j] *= s;
    }
    for (unsigned r = 0; r < 4; ++r) {
      if (r == col || a.m[r][col].is_zero()) continue;
      FieldElement f = a.m[r][col];
      for (unsigned j = 0; j < 4; ++j) {
        a.m[r][j] -= f * a.m[col][j];
        inv.m[r][j] -= f * inv.m[col][j];
      }
    }
  }
  return inv;
}

FieldElement Matrix4::determinant() const {
  Matrix4 a = *this;
  FieldElement det(1);
  for (unsigned col = 0; col < 4; ++col) {
    unsigned piv = col;
    while (piv < 4 && a.m[piv][col].is_zero()) ++piv;
    if (piv == 4) return {};
    if (piv != col) {
      std::swap(a.m[piv], a.m[col]);
      det.negate();
    }
    det *= a.m[col][col];
    FieldElement s = a.m[col][col].inverse();
    for (unsigned r = col + 1; r < 4; ++r) {
      if (a.m[r][col].is_zero()) continue;
      FieldElement f = a.m[r][col] * s;
      for (unsigned j = col; j < 4; ++j) a.m[r][j] -= f * a.m[col][j];
    }
  }
  return det;
}

bool Matrix4::is_identity() const { return *this == identity(); }

std::string Matrix4::key() const {
  std::string k;
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) {
      if (i || j) k += '|';
      k += m[i][j].str();
    }
  }
  return k;
}

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
  Matrix4 r;
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) {
      for (unsigned k = 0; k < 4; ++k) {
        if (!a.m[i][k].is_zero() && !b.m[k][j].is_zero()) r.m[i][j].add_product(a.m[i][k], b.m[k][j]);
      }
    }
  }
  return r;
}

std::array<FieldElement, 4> operator*(const Matrix4& a, const std::array<FieldElement, 4>& v) {
  std::array<FieldElement, 4> r{};
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned k = 0; k < 4; ++k) {
      if (!a.m[i][k].is_zero() && !v[k].is_zero()) r[i].add_product(a.m[i][k], v[k]);
    }
  }
  return r;
}

bool operator==(const Matrix4& a, const Matrix4& b) {
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) {
      if (!(a.m[i][j] == b.m[i][j])) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------ substitution

namespace {

// One elementary substitution step applied to a dense homogeneous polynomial.
struct SubstStep {
  enum class Kind { Relabel, Scale, Shear } kind = Kind::Relabel;
  std::array<unsigned, 4> target{};       // Relabel: x_i -> x_target[i]
  std::array<FieldElement, 4> factor{};   // Scale: x_i -> factor[i] * x_i
  unsigned var = 0;                       // Shear: x_var -> x_var + c * x_source
  unsigned source = 0;
  FieldElement c;
};

// Factors A = P L D U1 and returns the substitution steps realizing p(A x) in order.
std::vector<SubstStep> plan_substitution(const Matrix4& a) {
  Matrix4 work = a;
  Matrix4 lower = Matrix4::identity();
  std::array<unsigned, 4> rows{0, 1, 2, 3};
  for (unsigned col = 0; col < 4; ++col) {
    unsigned piv = col;
    while (piv < 4 && work.m[piv][col].is_zero()) ++piv;
    if (piv == 4) throw SingularMatrix();
    if (piv != col) {
      std::swap(work.m[piv], work.m[col]);
      std::swap(rows[piv], rows[col]);
      for (unsigned j = 0; j < col; ++j) std::swap(lower.m[piv][j], lower.m[col][j]);
    }
    FieldElement inv = work.m[col][col].inverse();
    for (unsigned r = col + 1; r < 4; ++r) {
      if (work.m[r][col].is_zero()) continue;
      FieldElement f = work.m[r][col] * inv;
      for (unsigned j = col; j < 4; ++j) work.m[r][j] -= f * work.m[col][j];
      lower.m[r][col] = std::move(f);
    }
  }

  std::vector<SubstStep> steps;
  // P has P[rows[j]][j] = 1, so (P y)_i = y_j with rows[j] == i.
  SubstStep relabel;
  relabel.kind = SubstStep::Kind::Relabel;
  bool trivial_perm = true;
  for (unsigned j = 0; j < 4; ++j) {
    relabel.target[rows[j]] = j;
    if (rows[j] != j) trivial_perm = false;
  }
  if (!trivial_perm) steps.push_back(relabel);

  for (unsigned k = 0; k < 4; ++k) {
    for (unsigned i = k + 1; i < 4; ++i) {
      if (!lower.m[i][k].is_zero()) {
        SubstStep s;
  s.kind = SubstStep::Kind::Shear;
        s.var = i;
        s.source = k;
        s.c = lower.m[i][k];
        steps.push_back(std::move(s));
      }
    }
  }

  SubstStep scale;
  scale.kind = SubstStep::Kind::Scale;
  bool trivial_scale = true;
  std::array<FieldElement, 4> diag_inv;
  for (unsigned k = 0; k < 4; ++k) {
    scale.factor[k] = work.m[k][k];
    diag_inv[k] = work.m[k][k].inverse();
    if (!work.m[k][k].is_one()) trivial_scale = false;
  }
  if (!trivial_scale) steps.push_back(scale);

  for (int k = 3; k >= 1; --k) {
    for (int i = 0; i < k; ++i) {
      if (work.m[i][k].is_zero()) continue;
      SubstStep s;
  s.kind = SubstStep::Kind::Shear;
      s.var = static_cast<unsigned>(i);
      s.source = static_cast<unsigned>(k);
      s.c = work.m[i][k] * diag_inv[i];
      steps.push_back(std::move(s));
    }
  }
  return steps;
}

std::vector<std::vector<Rational>> binomials(unsigned n) {
  std::vector<std::vector<Rational>> b(n + 1);
  for (unsigned a = 0; a <= n; ++a) {
    b[a].resize(a + 1);
    b[a][0] = Rational(1);
    for (unsigned t = 1; t <= a; ++t) b[a][t] = t == a ? Rational(1) : b[a - 1][t - 1] + b[a - 1][t];
  }
  return b;
}

void apply_step(std::vector<FieldElement>& dense, const std::vector<Monomial>& mons, unsigned n, const SubstStep& step,
                const std::vector<std::vector<Rational>>& binom) {
  switch (step.kind) {
    case SubstStep::Kind::Relabel: {
      std::vector<FieldElement> out(dense.size());
      for (std::size_t idx = 0; idx < dense.size(); ++idx) {
        if (dense[idx].is_zero()) continue;
        Monomial b;
        for (unsigned i = 0; i < 4; ++i) b.e[step.target[i]] = static_cast<std::uint16_t>(b.e[step.target[i]] + mons[idx].e[i]);
        out[HomogeneousIndex::index(b)] = std::move(dense[idx]);
      }
      dense = std::move(out);
      return;
    }
    case SubstStep::Kind::Scale: {
      std::array<std::vector<FieldElement>, 4> pw;
      for (unsigned i = 0; i < 4; ++i) {
        pw[i].resize(n + 1);
        pw[i][0] = FieldElement(1);
        for (unsigned t = 1; t <= n; ++t) pw[i][t] = pw[i][t - 1] * step.factor[i];
      }
      for (std::size_t idx = 0; idx < dense.size(); ++idx) {
        if (dense[idx].is_zero()) continue;
        for (unsigned i = 0; i < 4; ++i) {
          unsigned a = mons[idx].e[i];
          if (a && !pw[i][a].is_one()) dense[idx] *= pw[i][a];
        }
      }
      return;
    }
    case SubstStep::Kind::Shear: {
      // weight[a][t] = C(a, t) * c^t
      std::vector<FieldElement> cpow(n + 1);
      cpow[0] = FieldElement(1);
      for (unsigned t = 1; t <= n; ++t) cpow[t] = cpow[t - 1] * step.c;
      std::vector<std::vector<FieldElement>> weight(n + 1);
      for (unsigned a = 0; a <= n; ++a) {
        weight[a].resize(a + 1);
        for (unsigned t = 0; t <= a; ++t) weight[a][t] = cpow[t].scaled(binom[a][t]);
      }
      std::vector<FieldElement> out(dense.size());
      for (std::size_t idx = 0; idx < dense.size(); ++idx) {
        if (dense[idx].is_zero()) continue;
        const Monomial& m = mons[idx];
        unsigned a = m.e[step.var];
        out[idx] += dense[idx];
        for (unsigned t = 1; t <= a; ++t) {
          Monomial b = m;
          b.e[step.var] = static_cast<std::uint16_t>(b.e[step.var] - t);
          b.e[step.source] = static_cast<std::uint16_t>(b.e[step.source] + t);
          out[HomogeneousIndex::index(b)].add_product(dense[idx], weight[a][t]);
        }
      }
      dense = std::move(out);
      return;
    }
  }
}

}  // namespace

MPoly substitute_matrix(const MPoly& p, const Matrix4& a) {
  if (p.is_zero()) return p;
  std::vector<SubstStep> steps = plan_substitution(a);
  // Group terms by total degree; each homogeneous component is transformed densely.
  std::map<unsigned, std::vector<Term>, std::greater<>> components;
  for (const auto& t : p.terms()) components[t.mono.degree()].push_back(t);
  MPoly result(p.space());
  for (auto& [n, terms] : components) {
    std::vector<FieldElement> dense(HomogeneousIndex::count(n));
    for (auto& t : terms) dense[HomogeneousIndex::index(t.mono)] = t.coeff;
    std::vector<Monomial> mons = HomogeneousIndex::enumerate(n);
    auto binom = binomials(n);
    for (const auto& step : steps) apply_step(dense, mons, n, step, binom);
    result += MPoly::from_dense(p.space(), n, std::move(dense));
  }
  return result;
}

MPoly substitute_linear(const MPoly& p, const Matrix4& g) { return substitute_matrix(p, g.inverse()); }

MPoly act_with_inverse(const MPoly& p, const Matrix4& g_inverse) { return substitute_matrix(p, g_inverse); }

// -------------------------------------------------------------- evaluation

FieldElement evaluate(const MPoly& p, const std::array<FieldElement, 4>& point) {
  if (p.is_zero()) return {};
  unsigned maxe = 0;
  for (const auto& t : p.terms()) {
    for (auto v : t.mono.e) maxe = std::max<unsigned>(maxe, v);
  }
  std::array<std::vector<FieldElement>, 4> pw;
  for (unsigned i = 0; i < 4; ++i) {
    pw[i].resize(maxe + 1);
    pw[i][0] = FieldElement(1);
    for (unsigned k = 1; k <= maxe; ++k) pw[i][k] = pw[i][k - 1] * point[i];
  }
  FieldElement sum;
  for (const auto& t : p.terms()) {
    FieldElement v = t.coeff;
    for (unsigned i = 0; i < 4; ++i) {
      if (t.mono.e[i]) v *= pw[i][t.mono.e[i]];
    }
    sum += v;
  }
  return sum;
}

MPoly partial(const MPoly& p, unsigned var) {
  if (var >= 4) throw std::out_of_range("variable index");
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    unsigned a = t.mono.e[var];
    if (a == 0) continue;
    Monomial m = t.mono;
    m.e[var] = static_cast<std::uint16_t>(a - 1);
    terms.push_back({m, t.coeff.scaled(Rational(static_cast<long long>(a)))});
  }
  return MPoly::from_terms(p.space(), std::move(terms));
}

DivRem divrem(const MPoly& p, const MPoly& d) {
  if (p.space() != d.space()) throw SpaceMismatch();
  if (d.is_zero()) throw DivisionByZero();
  const Term& lead = d.leading();
  FieldElement lead_inv = lead.coeff.inverse();
  std::map<Monomial, FieldElement, std::greater<>> work;
  for (const auto& t : p.terms()) work.emplace(t.mono, t.coeff);
  std::vector<Term> quotient;
  std::vector<Term> remainder;
  while (!work.empty()) {
    auto it = work.begin();
    if (lead.mono.divides(it->first)) {
      Monomial m = it->first / lead.mono;
      FieldElement c = it->second * lead_inv;
      for (const auto& dt : d.terms()) {
        Monomial target = m * dt.mono;
        auto [pos, inserted] = work.try_emplace(target);
        pos->second -= c * dt.coeff;
        if (pos->second.is_zero()) work.erase(pos);
      }
      quotient.push_back({m, std::move(c)});
    } else {
      remainder.push_back({it->first, std::move(it->second)});
      work.erase(it);
    }
  }
  return {MPoly::from_terms(p.space(), std::move(quotient)), MPoly::from_terms(p.space(), std::move(remainder))};
}

FieldElement fischer_pairing(const MPoly& p, const MPoly& r) {
  if (p.space() != r.space()) throw SpaceMismatch();
  static const std::vector<Rational> factorial = [] {
    std::vector<Rational> f(256);
    f[0] = Rational(1);
    for (long long k = 1; k < 256; ++k) f[k] = f[k - 1] * Rational(k);
    return f;
  }();
  FieldElement sum;
  const auto& a = p.terms();
  const auto& b = r.terms();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].mono > b[j].mono) {
      ++i;
    } else if (b[j].mono > a[i].mono) {
      ++j;
    } else {
      Rational w(1);
      for (auto e : a[i].mono.e) w *= factorial.at(e);
      sum += (a[i].coeff * b[j].coeff).scaled(w);
      ++i;
      ++j;
    }
  }
  return sum;
}

// ----------------------------------------------------------------- formats

std::string to_text(const MPoly& p) {
  std::string out;
  for (const auto& t : p.terms()) {
    out += t.coeff.str();
    out += " ;";
    for (auto e : t.mono.e) {
      out += ' ';
      out += std::to_string(e);
    }
    out += '\n';
  }
  return out;
}

MPoly parse_text(std::string_view text, Space s) {
  std::vector<Term> terms;
  std::size_t lineno = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    auto semi = line.find(';');
    if (semi == std::string_view::npos) throw ParseError("line " + std::to_string(lineno) + ": missing ';'");
    Term t;
    t.coeff = FieldElement::parse(line.substr(0, semi));
    std::istringstream exps{std::string(line.substr(semi + 1))};
    for (unsigned k = 0; k < 4; ++k) {
      long v = -1;
      if (!(exps >> v) || v < 0 || v > 4095) throw ParseError("line " + std::to_string(lineno) + ": bad exponent");
      t.mono.e[k] = static_cast<std::uint16_t>(v);
    }
    std::string extra;
    if (exps >> extra) throw ParseError("line " + std::to_string(lineno) + ": trailing data");
    terms.push_back(std::move(t));
  }
  return MPoly::from_terms(s, std::move(terms));
}

nlohmann::json to_json(const MPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    nlohmann::json coords = nlohmann::json::array();
    for (unsigned k = 0; k < FieldElement::kDim; ++k) coords.push_back(t.coeff.coord(k).str());
    terms.push_back({{"exponents", {t.mono.e[0], t.mono.e[1], t.mono.e[2], t.mono.e[3]}}, {"coeff", coords}});
  }
  return {{"space", std::string(space_name(p.space()))}, {"terms", terms}};
}

MPoly from_json(const nlohmann::json& j) {
  try {
    Space s = parse_space(j.at("space").get<std::string>());
    std::vector<Term> terms;
    for (const auto& jt : j.at("terms")) {
      Term t;
      const auto& ex = jt.at("exponents");
      if (ex.size() != 4) throw ParseError("exponents must have 4 entries");
      for (unsigned k = 0; k < 4; ++k) t.mono.e[k] = ex.at(k).get<std::uint16_t>();
      const auto& co = jt.at("coeff");
      if (co.size() != FieldElement::kDim) throw ParseError("coeff must have 16 coordinates");
      for (unsigned k = 0; k < FieldElement::kDim; ++k) t.coeff.set_coord(k, Rational::parse(co.at(k).get<std::string>()));
      terms.push_back(std::move(t));
    }
    return MPoly::from_terms(s, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("polynomial json: ") + e.what());
  }
}

}  // namespace reflinv
