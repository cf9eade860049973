#include "reflinv/geometry.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

#include "reflinv/klein.hpp"

namespace reflinv {

// ------------------------------------------------------------- quaternions

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
          p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
          p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
          p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}

Quaternion quaternion_q2() { return {0, 0, 1, 0}; }

Quaternion quaternion_p3() {
  const Rational h(1, 2);
  return {h, h, -h, h};
}

Quaternion quaternion_p4() {
  FieldElement s = FieldElement::sqrt2().scaled(Rational(1, 2));
  return {s, s, 0, 0};
}

Quaternion quaternion_p5() {
  const Rational h(1, 2);
  FieldElement t = FieldElement::tau();
  return {t.scaled(h), 0, (t - FieldElement(1)).scaled(h), h};
}

// ------------------------------------------------------------------- SU(2)

SU2Element::SU2Element(Mat2 m) : m_(std::move(m)) {
  // conj(M)^T M = I and det M = 1
  for (unsigned r = 0; r < 2; ++r) {
    for (unsigned c = 0; c < 2; ++c) {
      FieldElement s = m_[0][r].conj() * m_[0][c] + m_[1][r].conj() * m_[1][c];
      if (!(s == FieldElement(r == c ? 1 : 0))) throw NotUnitary();
    }
  }
  if (!(m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0]).is_one()) throw NotUnitary();
}

SU2Element SU2Element::identity() { return SU2Element(Mat2{{{1, 0}, {0, 1}}}, Trusted{}); }

SU2Element SU2Element::from_quaternion(const Quaternion& q) {
  const FieldElement i = FieldElement::i();
  return SU2Element(Mat2{{{q.a + i * q.b, q.c + i * q.d}, {-q.c + i * q.d, q.a - i * q.b}}});
}

bool SU2Element::is_central() const {
  return m_[0][1].is_zero() && m_[1][0].is_zero() && m_[0][0] == m_[1][1] && m_[0][0].is_rational();
}

SU2Element SU2Element::inverse() const {
  return SU2Element(Mat2{{{m_[1][1], -m_[0][1]}, {-m_[1][0], m_[0][0]}}}, Trusted{});
}

SU2Element SU2Element::inverse_transpose() const {
  return SU2Element(Mat2{{{m_[1][1], -m_[1][0]}, {-m_[0][1], m_[0][0]}}}, Trusted{});
}

Vec2 SU2Element::apply(const Vec2& v) const {
  return {m_[0][0] * v[0] + m_[0][1] * v[1], m_[1][0] * v[0] + m_[1][1] * v[1]};
}

std::string SU2Element::key() const {
  return m_[0][0].str() + "|" + m_[0][1].str() + "|" + m_[1][0].str() + "|" + m_[1][1].str();
}

SU2Element operator*(const SU2Element& a, const SU2Element& b) {
  Mat2 r;
  for (unsigned i = 0; i < 2; ++i) {
    for (unsigned j = 0; j < 2; ++j) r[i][j] = a.m_[i][0] * b.m_[0][j] + a.m_[i][1] * b.m_[1][j];
  }
  return SU2Element(std::move(r), SU2Element::Trusted{});
}

BinaryKind parse_binary_kind(const std::string& name) {
  if (name == "T") return BinaryKind::T;
  if (name == "O") return BinaryKind::O;
  if (name == "I") return BinaryKind::I;
  throw UnknownName(name);
}

std::vector<SU2Element> quaternion_generators(BinaryKind kind) {
  std::vector<SU2Element> gens{SU2Element::from_quaternion(quaternion_q2()),
                               SU2Element::from_quaternion(quaternion_p3())};
  if (kind == BinaryKind::O) gens.push_back(SU2Element::from_quaternion(quaternion_p4()));
  if (kind == BinaryKind::I) gens.push_back(SU2Element::from_quaternion(quaternion_p5()));
  return gens;
}

const std::vector<SU2Element>& binary_group(BinaryKind kind) {
  static std::mutex mu;
  static std::map<BinaryKind, std::vector<SU2Element>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(kind);
  if (it != cache.end()) return it->second;
  auto gens = quaternion_generators(kind);
  std::vector<SU2Element> elems{SU2Element::identity()};
  std::unordered_map<std::string, bool> seen{{elems.front().key(), true}};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& g : gens) {
      SU2Element n = elems[k] * g;
      if (!seen.emplace(n.key(), true).second) continue;
      if (elems.size() >= 1000) throw BoundExceeded(1000);
      elems.push_back(std::move(n));
    }
  }
  return cache.emplace(kind, std::move(elems)).first->second;
}

// ------------------------------------------------------------ quadric maps

namespace {

Point4 coordinates_of(const Mat2& y) {
  const FieldElement mi = -FieldElement::i();
  const Rational h(1, 2);
  return {(y[0][0] + y[1][1]).scaled(h), (mi * (y[0][0] - y[1][1])).scaled(h), (y[0][1] - y[1][0]).scaled(h),
          (mi * (y[0][1] + y[1][0])).scaled(h)};
}

Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (unsigned i = 0; i < 2; ++i) {
    for (unsigned j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  }
  return r;
}

bool proportional(const Vec2& a, const Vec2& b) { return (a[0] * b[1] - a[1] * b[0]).is_zero(); }

std::string vec_key(const Vec2& v) { return v[0].str() + "|" + v[1].str(); }

}  // namespace

Matrix4 sigma(const SU2Element& g1, const SU2Element& g2) {
  const FieldElement i = FieldElement::i();
  const std::array<Mat2, 4> basis{Mat2{{{1, 0}, {0, 1}}}, Mat2{{{i, 0}, {0, -i}}}, Mat2{{{0, 1}, {-1, 0}}},
                                  Mat2{{{0, i}, {i, 0}}}};
  Mat2 g2inv = g2.inverse().matrix();
  Matrix4 out;
  for (unsigned k = 0; k < 4; ++k) {
    Point4 col = coordinates_of(mul(mul(g1.matrix(), basis[k]), g2inv));
    for (unsigned r = 0; r < 4; ++r) out(r, k) = col[r];
  }
  return out;
}

Mat2 identify(const Point4& x) {
  const FieldElement i = FieldElement::i();
  return Mat2{{{x[0] + i * x[1], x[2] + i * x[3]}, {-x[2] + i * x[3], x[0] - i * x[1]}}};
}

Point4 segre(const Vec2& v, const Vec2& w) {
  if ((v[0].is_zero() && v[1].is_zero()) || (w[0].is_zero() && w[1].is_zero())) {
    throw std::invalid_argument("segre: zero vector");
  }
  return coordinates_of(Mat2{{{v[0] * w[0], v[0] * w[1]}, {v[1] * w[0], v[1] * w[1]}}});
}

Vec2 normalize_projective(const Vec2& v) {
  if (!v[0].is_zero()) return {FieldElement(1), v[1] / v[0]};
  if (!v[1].is_zero()) return {FieldElement(), FieldElement(1)};
  throw std::invalid_argument("normalize_projective: zero vector");
}

// ------------------------------------------------------------ fixed points

namespace {

// Eigenvector of m for eigenvalue alpha (a null vector of m - alpha I).
Vec2 eigenvector(const Mat2& m, const FieldElement& alpha) {
  FieldElement a = m[0][0] - alpha;
  FieldElement d = m[1][1] - alpha;
  Vec2 v;
  if (!a.is_zero() || !m[0][1].is_zero()) {
    v = {-m[0][1], a};
  } else {
    v = {-d, m[1][0]};
  }
  return normalize_projective(v);
}

std::vector<FieldElement> unit_eigenvalues(const SU2Element& p) {
  FieldElement tr = p.trace();
  std::vector<FieldElement> out;
  for (int k = 0; k < 24; ++k) {
    FieldElement z = FieldElement::root_of_unity(24, k);
    if (z + z.conj() == tr) out.push_back(z);
  }
  if (out.size() != 2) throw OutsideField("eigenvalues of trace " + tr.str() + " are not 24th roots of unity");
  return out;
}

EigenLine line_for(const SU2Element& source, const SU2Element& acting, const FieldElement& alpha, Ruling ruling) {
  Vec2 v = eigenvector(acting.matrix(), alpha);
  Vec2 av = acting.apply(v);
  if (!(av[0] == alpha * v[0]) || !(av[1] == alpha * v[1])) throw std::logic_error("eigenvector check failed");
  return EigenLine{source, alpha, v, ruling};
}

}  // namespace

std::array<EigenLine, 2> fixed_points(const SU2Element& p) {
  if (p.is_central()) throw CentralElement();
  auto eig = unit_eigenvalues(p);
  std::sort(eig.begin(), eig.end(), [](const FieldElement& a, const FieldElement& b) { return a.str() < b.str(); });
  return {line_for(p, p, eig[0], Ruling::First), line_for(p, p, eig[1], Ruling::First)};
}

EigenLine second_ruling_line(const SU2Element& p, const FieldElement& alpha) {
  return line_for(p, p.inverse_transpose(), alpha, Ruling::Second);
}

Couple make_couple(const EigenLine& left) {
  if (left.ruling != Ruling::First) throw std::invalid_argument("make_couple: left line must lie in the first ruling");
  return Couple{left, second_ruling_line(left.source, left.eigenvalue)};
}

namespace {

// Basis of the right nullspace of a k x 4 matrix, via reduced row echelon form.
std::vector<Point4> nullspace(std::vector<Point4> rows) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (unsigned c = 0; c < 4 && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    FieldElement inv = rows[r][c].inverse();
    for (auto& e : rows[r]) e *= inv;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c].is_zero()) continue;
      FieldElement f = rows[o][c];
      for (unsigned k = 0; k < 4; ++k) rows[o][k] -= f * rows[r][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<Point4> out;
  for (unsigned free = 0; free < 4; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free)) != pivot_col.end()) continue;
    Point4 v{};
    v[free] = FieldElement(1);
    for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -rows[k][free];
    out.push_back(v);
  }
  return out;
}

}  // namespace

MPoly couple_plane(const Couple& c) {
  const std::array<Vec2, 3> samples{Vec2{1, 0}, Vec2{0, 1}, Vec2{1, 1}};
  std::vector<Point4> rows;
  for (const auto& s : samples) rows.push_back(segre(c.left.eigenvector, s));
  for (const auto& s : samples) rows.push_back(segre(s, c.right.eigenvector));
  auto ns = nullspace(rows);
  if (ns.size() != 1) throw DegenerateCouple();
  MPoly form(Space::X);
  for (unsigned k = 0; k < 4; ++k) form += MPoly::variable(Space::X, k).scaled(ns[0][k]);
  for (const auto& pt : rows) {
    if (!evaluate(form, pt).is_zero()) throw DegenerateCouple();
  }
  return form.monic();
}

// ----------------------------------------------------------------- orbits

namespace {

unsigned element_order(const SU2Element& g) {
  SU2Element x = g;
  unsigned n = 1;
  while (!(x == SU2Element::identity())) {
    x = x * g;
    if (++n > 120) throw std::logic_error("element order too large");
  }
  return n;
}

std::vector<Vec2> orbit_of(const std::vector<SU2Element>& group, const Vec2& v) {
  std::vector<Vec2> out;
  std::unordered_map<std::string, bool> seen;
  for (const auto& g : group) {
    Vec2 w = normalize_projective(g.apply(v));
    if (seen.emplace(vec_key(w), true).second) out.push_back(std::move(w));
  }
  return out;
}

// First element of order m fixing v projectively.
const SU2Element& stabilizer_generator(const std::vector<SU2Element>& group, const Vec2& v, unsigned m) {
  for (const auto& g : group) {
    if (g.is_central()) continue;
    if (proportional(g.apply(v), v) && element_order(g) == m) return g;
  }
  throw std::logic_error("no stabilizer generator found");
}

FieldElement eigenvalue_at(const SU2Element& g, const Vec2& v) {
  Vec2 gv = g.apply(v);
  return v[0].is_zero() ? gv[1] / v[1] : gv[0] / v[0];
}

std::vector<LineOrbit> orbits_by_bookkeeping(const std::vector<SU2Element>& group) {
  // Each non-central element lies in exactly one maximal cyclic subgroup (its centralizer),
  // whose two fixed points have that subgroup as stabilizer.
  std::map<std::size_t, std::size_t> noncentral_by_centralizer;
  for (const auto& g : group) {
    if (g.is_central()) continue;
    std::size_t m = 0;
    for (const auto& h : group) {
      if (g * h == h * g) ++m;
    }
    ++noncentral_by_centralizer[m];
  }
  std::vector<LineOrbit> out;
  for (const auto& [m, count] : noncentral_by_centralizer) {
    std::size_t subgroups = count / (m - 2);
    std::size_t points = 2 * subgroups;
    std::size_t length = group.size() / m;
    for (std::size_t k = 0; k < points / length; ++k) out.push_back(LineOrbit{length, m, {}, std::nullopt});
  }
  std::sort(out.begin(), out.end(), [](const LineOrbit& a, const LineOrbit& b) { return a.length < b.length; });
  return out;
}

}  // namespace

std::vector<LineOrbit> line_orbits(BinaryKind kind) {
  const auto& group = binary_group(kind);
  if (kind == BinaryKind::I) return orbits_by_bookkeeping(group);
  std::vector<Vec2> points;
  std::unordered_map<std::string, bool> seen;
  for (const auto& g : group) {
    if (g.is_central()) continue;
    for (const auto& line : fixed_points(g)) {
      if (seen.emplace(vec_key(line.eigenvector), true).second) points.push_back(line.eigenvector);
    }
  }
  std::unordered_map<std::string, bool> assigned;
  std::vector<LineOrbit> out;
  for (const auto& p : points) {
    if (assigned.count(vec_key(p))) continue;
    LineOrbit o;
    o.points = orbit_of(group, p);
    for (const auto& q : o.points) assigned.emplace(vec_key(q), true);
    o.length = o.points.size();
    o.stabilizer_order = group.size() / o.length;
    o.eigenvalue = eigenvalue_at(stabilizer_generator(group, p, static_cast<unsigned>(o.stabilizer_order)), p);
    out.push_back(std::move(o));
  }
  std::stable_sort(out.begin(), out.end(), [](const LineOrbit& a, const LineOrbit& b) { return a.length < b.length; });
  return out;
}

MPoly orbit_plane_product(const std::string& name) {
  BinaryKind kind;
  std::size_t length;
  if (name == "T6") {
    kind = BinaryKind::T;
    length = 6;
  } else if (name == "O8") {
    kind = BinaryKind::O;
    length = 8;
  } else if (name == "O12") {
    kind = BinaryKind::O;
    length = 12;
  } else {
    throw UnknownName(name);
  }
  const auto& group = binary_group(kind);
  for (const auto& o : line_orbits(kind)) {
    if (o.length != length) continue;
    MPoly product = MPoly::constant(Space::X, FieldElement(1));
    for (const auto& v : o.points) {
      const SU2Element& g = stabilizer_generator(group, v, static_cast<unsigned>(o.stabilizer_order));
      EigenLine left{g, eigenvalue_at(g, v), v, Ruling::First};
      product *= couple_plane(make_couple(left));
    }
    return product;
  }
  throw std::logic_error("no orbit of length " + std::to_string(length));
}

MPoly invariant_from_orbit_raw(const std::string& name) {
  std::string orbit_name;
  if (name == "F6") {
    orbit_name = "T6";
  } else if (name == "F8") {
    orbit_name = "O8";
  } else if (name == "F12") {
    orbit_name = "O12";
  } else {
    throw UnknownName(name);
  }
  MPoly sum = reynolds_sum(builtin_group("Ttilde1"), orbit_plane_product(orbit_name));
  if (sum.is_zero()) throw std::logic_error("orbit Reynolds sum vanished for " + name);
  return sum;
}

MPoly invariant_from_orbit(const std::string& name) { return invariant_from_orbit_raw(name).monic(); }

// ------------------------------------------------------------------- lift

MPoly lift(const MPoly& p) {
  if (p.is_zero()) return MPoly(Space::X);
  if (p.space() != Space::Z) throw SpaceMismatch();
  unsigned n = 0;
  bool first = true;
  for (const auto& t : p.terms()) {
    const auto& e = t.mono.e;
    if (e[0] + e[1] != e[2] + e[3]) throw UnbalancedBidegree();
    unsigned d = e[0] + e[1];
    if (!first && d != n) throw UnbalancedBidegree();
    n = d;
    first = false;
  }
  const FieldElement i = FieldElement::i();
  auto x = [](unsigned k) { return MPoly::variable(Space::X, k); };
  // z0z2, z0z3, z1z2, z1z3 as linear forms in x
  std::array<MPoly, 4> pair{x(0) + x(1).scaled(i), x(2) + x(3).scaled(i), x(3).scaled(i) - x(2),
                            x(0) - x(1).scaled(i)};
  std::array<std::vector<MPoly>, 4> pw;
  for (unsigned k = 0; k < 4; ++k) {
    pw[k].push_back(MPoly::constant(Space::X, FieldElement(1)));
    for (unsigned j = 1; j <= n; ++j) pw[k].push_back(pw[k].back() * pair[k]);
  }
  MPoly out(Space::X);
  for (const auto& t : p.terms()) {
    const auto& e = t.mono.e;
    unsigned m00 = std::min(e[0], e[2]);
    unsigned m01 = e[0] - m00;
    unsigned m10 = e[2] - m00;
    unsigned m11 = e[1] - m10;
    out += (pw[0][m00] * pw[1][m01] * pw[2][m10] * pw[3][m11]).scaled(t.coeff);
  }
  return out;
}

namespace {

struct LiftSpec {
  std::string group, left, right;
  KleinName form;
  SyzygyKind family;
};

LiftSpec lift_spec(const std::string& name) {
  if (name == "G12deg12") return {"H4", "Itilde1", "Itilde2", KleinName::f, SyzygyKind::Icosahedral};
  if (name == "G20") return {"H4", "Itilde1", "Itilde2", KleinName::H, SyzygyKind::Icosahedral};
  if (name == "G30") return {"H4", "Itilde1", "Itilde2", KleinName::Tau, SyzygyKind::Icosahedral};
  if (name == "F6L") return {"F4", "Ttilde1", "Ttilde2", KleinName::t, SyzygyKind::Tetrahedral};
  if (name == "F8L") return {"F4", "Ttilde1", "Ttilde2", KleinName::W, SyzygyKind::Tetrahedral};
  if (name == "F12L") return {"F4", "Ttilde1", "Ttilde2", KleinName::chi, SyzygyKind::Tetrahedral};
  throw UnknownName(name);
}

MPoly group_sum(const LiftSpec& s, const MPoly& p, LiftRoute route) {
  const MatrixGroup& g = builtin_group(s.group);
  switch (route) {
    case LiftRoute::Factored:
      return reynolds_sum_factored(factorize(g, builtin_group(s.left), builtin_group(s.right)), p);
    case LiftRoute::Projection:
      return InvariantSpace(g, static_cast<unsigned>(p.degree())).reynolds(p);
    case LiftRoute::Direct:
      return reynolds_sum(g, p);
  }
  throw std::logic_error("unhandled route");
}

}  // namespace

LiftResult invariant_by_lift(const std::string& name, LiftRoute route) {
  LiftSpec s = lift_spec(name);
  std::string k = klein_name_str(s.form);
  LiftResult r;
  r.target = k + "1*" + k + "2";
  MPoly target = klein_form(s.form, 1).poly * klein_form(s.form, 2).poly;
  r.raw = group_sum(s, lift(target), route);
  if (r.raw.is_zero() || phi(r.raw).is_zero()) {
    // The sum fell into q * (invariants). Retry from forms already symmetrized
    // over the binary group realized in K.
    if (s.family != SyzygyKind::Icosahedral) throw ZeroImage();
    target = oriented_icosahedral_form(s.form, 1) * oriented_icosahedral_form(s.form, 2);
    r.target = k + "'1*" + k + "'2";
    r.used_oriented = true;
    r.raw = group_sum(s, lift(target), route);
    if (r.raw.is_zero() || phi(r.raw).is_zero()) throw ZeroImage();
  }
  r.invariant = r.raw.monic();
  return r;
}

}  // namespace reflinv
