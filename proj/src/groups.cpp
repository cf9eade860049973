#include "reflinv/groups.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <thread>

namespace reflinv {

// ------------------------------------------------------------- SO4Element

SO4Element::SO4Element(Matrix4 m) : m_(std::move(m)) {
  if (!(m_.transpose() * m_).is_identity()) throw NotOrthogonal();
}

MatrixGroup::MatrixGroup(std::string name, std::vector<SO4Element> elements)
    : name_(std::move(name)), elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (std::size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k].key(), k);
}

std::size_t MatrixGroup::position(const SO4Element& g) const {
  auto it = index_.find(g.key());
  return it == index_.end() ? elements_.size() : it->second;
}

// ------------------------------------------------------- named generators

namespace {

using Rows = std::array<std::array<FieldElement, 4>, 4>;

SO4Element make(const Rows& rows, const FieldElement& scale = FieldElement(1)) {
  return SO4Element(Matrix4::from_rows(rows, scale));
}

}  // namespace

SO4Element named_matrix(NamedMatrix which) {
  const FieldElement t = FieldElement::tau();
  const FieldElement one(1);
  const FieldElement half(Rational(1, 2));
  const FieldElement inv_sqrt2 = FieldElement::sqrt2().scaled(Rational(1, 2));
  switch (which) {
    case NamedMatrix::Q2Left:
      return make({{{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}}});
    case NamedMatrix::Q2Right:
      return make({{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}});
    case NamedMatrix::P3Left:
      return make({{{1, -1, 1, -1}, {1, 1, -1, -1}, {-1, 1, 1, -1}, {1, 1, 1, 1}}}, half);
    case NamedMatrix::P3Right:
      return make({{{1, 1, -1, 1}, {-1, 1, -1, -1}, {1, 1, 1, -1}, {-1, 1, 1, 1}}}, half);
    case NamedMatrix::P4Left:
      return make({{{1, -1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}}}, inv_sqrt2);
    case NamedMatrix::P4Right:
      return make({{{1, 1, 0, 0}, {-1, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}}}, inv_sqrt2);
    case NamedMatrix::P5Left:
      return make({{{t, 0, one - t, -1}, {0, t, -1, t - one}, {t - one, 1, t, 0}, {1, one - t, 0, t}}}, half);
    case NamedMatrix::P5Right:
      return make({{{t, 0, t - one, 1}, {0, t, -1, t - one}, {one - t, 1, t, 0}, {-1, one - t, 0, t}}}, half);
    case NamedMatrix::C:
      return SO4Element(Matrix4::diagonal({1, -1, -1, -1}));
    case NamedMatrix::CPrime:
      return make({{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}});
  }
  throw std::logic_error("unhandled named matrix");
}

std::string_view named_matrix_label(NamedMatrix which) {
  switch (which) {
    case NamedMatrix::Q2Left: return "(q2,1)";
    case NamedMatrix::Q2Right: return "(1,q2)";
    case NamedMatrix::P3Left: return "(p3,1)";
    case NamedMatrix::P3Right: return "(1,p3)";
    case NamedMatrix::P4Left: return "(p4,1)";
    case NamedMatrix::P4Right: return "(1,p4)";
    case NamedMatrix::P5Left: return "(p5,1)";
    case NamedMatrix::P5Right: return "(1,p5)";
    case NamedMatrix::C: return "C";
    case NamedMatrix::CPrime: return "C'";
  }
  return "?";
}

std::vector<SO4Element> builtin_generators(const std::string& name) {
  using N = NamedMatrix;
  auto list = [](std::initializer_list<N> ids) {
    std::vector<SO4Element> out;
    for (N id : ids) out.push_back(named_matrix(id));
    return out;
  };
  if (name == "G6") return list({N::Q2Left, N::Q2Right, N::P3Left, N::P3Right});
  if (name == "G8") return list({N::Q2Left, N::Q2Right, N::P3Left, N::P3Right, N::P4Left, N::P4Right});
  if (name == "G12") return list({N::Q2Left, N::Q2Right, N::P3Left, N::P3Right, N::P5Left, N::P5Right});
  if (name == "F4") return list({N::Q2Left, N::Q2Right, N::P3Left, N::P3Right, N::C, N::CPrime});
  if (name == "H4") return list({N::Q2Left, N::Q2Right, N::P3Left, N::P3Right, N::P5Left, N::P5Right, N::C});
  if (name == "Ttilde1") return list({N::Q2Left, N::P3Left});
  if (name == "Otilde1") return list({N::Q2Left, N::P3Left, N::P4Left});
  if (name == "Itilde1") return list({N::Q2Left, N::P3Left, N::P5Left});
  if (name == "Ttilde2") return list({N::Q2Right, N::P3Right});
  if (name == "Otilde2") return list({N::Q2Right, N::P3Right, N::P4Right});
  if (name == "Itilde2") return list({N::Q2Right, N::P3Right, N::P5Right});
  throw UnknownName(name);
}

std::vector<std::string> builtin_group_names() {
  return {"G6", "G8", "G12", "F4", "H4", "Ttilde1", "Otilde1", "Itilde1", "Ttilde2", "Otilde2", "Itilde2"};
}

// ---------------------------------------------------------------- closure

MatrixGroup group_closure(const std::vector<SO4Element>& gens, std::size_t bound, std::string name) {
  std::vector<SO4Element> elements{SO4Element(Matrix4::identity())};
  std::unordered_map<std::string, std::size_t> seen{{elements.front().key(), 0}};
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const auto& g : gens) {
      SO4Element next = elements[k] * g;
      std::string key = next.key();
      if (seen.count(key)) continue;
      if (elements.size() >= bound) throw BoundExceeded(bound);
      seen.emplace(std::move(key), elements.size());
      elements.push_back(std::move(next));
    }
  }
  return MatrixGroup(std::move(name), std::move(elements));
}

const MatrixGroup& builtin_group(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, MatrixGroup> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, group_closure(builtin_generators(name), kDefaultClosureBound, name)).first;
  return it->second;
}

// --------------------------------------------------------------- Reynolds

namespace {

// Folds f over [0, n) with an associative, commutative MPoly sum, splitting the range across threads.
// Exact arithmetic makes the merged result identical to the sequential fold.
MPoly parallel_sum(std::size_t n, Space s, const std::function<MPoly(std::size_t)>& f) {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    MPoly acc(s);
    for (std::size_t k = 0; k < n; ++k) acc += f(k);
    return acc;
  }
  std::vector<MPoly> partial(threads, MPoly(s));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t k = t; k < n; k += threads) partial[t] += f(k);
    });
  }
  for (auto& th : pool) th.join();
  MPoly acc(s);
  for (auto& p : partial) acc += p;
  return acc;
}

}  // namespace

MPoly reynolds_sum(std::span<const SO4Element> elements, const MPoly& p) {
  return parallel_sum(elements.size(), p.space(),
                      [&](std::size_t k) { return act_with_inverse(p, elements[k].matrix().transpose()); });
}

GroupFactorization factorize(const MatrixGroup& g, const MatrixGroup& left, const MatrixGroup& right) {
  GroupFactorization f;
  f.left = left.elements();
  f.right = right.elements();
  f.group_order = g.order();
  f.overlap = 0;
  for (const auto& l : left.elements()) {
    if (!g.contains(l)) throw std::invalid_argument("factorize: left factor not contained in group");
    if (right.contains(l)) ++f.overlap;
  }
  for (const auto& r : right.elements()) {
    if (!g.contains(r)) throw std::invalid_argument("factorize: right factor not contained in group");
  }
  std::unordered_map<std::string, bool> seen;
  std::vector<SO4Element> sub;
  for (const auto& r : right.elements()) {
    for (const auto& l : left.elements()) {
      SO4Element rl = r * l;
      if (!(rl == l * r)) throw std::invalid_argument("factorize: factors do not commute");
      if (seen.emplace(rl.key(), true).second) sub.push_back(std::move(rl));
    }
  }
  std::size_t sub_order = left.order() * right.order() / f.overlap;
  if (sub.size() != sub_order || g.order() % sub_order != 0) {
    throw std::invalid_argument("factorize: product of factors is not a subgroup of the expected order");
  }
  std::vector<bool> covered(g.order(), false);
  for (std::size_t k = 0; k < g.order(); ++k) {
    if (covered[k]) continue;
    const SO4Element& c = g.elements()[k];
    f.coset_reps.push_back(c);
    for (const auto& h : sub) {
      std::size_t pos = g.position(c * h);
      if (pos == g.order() || covered[pos]) throw std::logic_error("factorize: cosets overlap");
      covered[pos] = true;
    }
  }
  return f;
}

MPoly reynolds_sum_factored(const GroupFactorization& f, const MPoly& p) {
  MPoly inner = reynolds_sum(std::span(f.left), p);
  MPoly middle = reynolds_sum(std::span(f.right), inner);
  if (f.overlap != 1) middle = middle.scaled(FieldElement(Rational(1, static_cast<long long>(f.overlap))));
  return reynolds_sum(std::span(f.coset_reps), middle);
}

}  // namespace reflinv

// ----------------------------------------------------------------- Molien

namespace reflinv {

bool MolienSeries::is_genuine() const {
  if (coefficients.empty() || !coefficients.front().is_one()) return false;
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](const Rational& c) { return c.is_integer() && c.sign() >= 0; });
}

namespace {

FieldElement minor_det(const Matrix4& m, const std::vector<unsigned>& idx) {
  // Laplace expansion along the first row; idx has at most four entries.
  if (idx.size() == 1) return m(idx[0], idx[0]);
  FieldElement total;
  std::size_t n = idx.size();
  for (std::size_t c = 0; c < n; ++c) {
    const FieldElement& a = m(idx[0], idx[c]);
    if (a.is_zero()) continue;
    // Minor with rows idx[1..] and columns idx minus idx[c].
    FieldElement sub;
    if (n == 2) {
      sub = m(idx[1], idx[1 - c]);
    } else {
      std::vector<unsigned> cols;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) cols.push_back(idx[k]);
      }
      if (n == 3) {
        sub = m(idx[1], cols[0]) * m(idx[2], cols[1]) - m(idx[1], cols[1]) * m(idx[2], cols[0]);
      } else {
        Matrix4 tmp;
        for (unsigned r = 0; r < 3; ++r) {
          for (unsigned k = 0; k < 3; ++k) tmp(r, k) = m(idx[r + 1], cols[k]);
        }
        sub = minor_det(tmp, {0, 1, 2});
      }
    }
    if (c % 2 == 0) {
      total += a * sub;
    } else {
      total -= a * sub;
    }
  }
  return total;
}

// Elementary symmetric functions of the eigenvalues: sums of principal minors.
std::array<FieldElement, 4> char_coefficients(const Matrix4& m) {
  std::array<FieldElement, 4> e;
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<unsigned> idx;
    for (unsigned k = 0; k < 4; ++k) {
      if (mask & (1u << k)) idx.push_back(k);
    }
    e[idx.size() - 1] += minor_det(m, idx);
  }
  return e;
}

}  // namespace

MolienSeries molien_series(const MatrixGroup& g, unsigned max_degree) {
  std::map<std::string, std::pair<std::array<FieldElement, 4>, std::size_t>> classes;
  for (const auto& el : g.elements()) {
    auto e = char_coefficients(el.matrix());
    std::string key = e[0].str() + "|" + e[1].str() + "|" + e[2].str() + "|" + e[3].str();
    auto [it, fresh] = classes.try_emplace(key, e, 0);
    ++it->second.second;
  }
  std::vector<FieldElement> total(max_degree + 1);
  for (const auto& [key, entry] : classes) {
    const auto& [e, count] = entry;
    // 1 / (1 - e1 t + e2 t^2 - e3 t^3 + e4 t^4)
    std::vector<FieldElement> a(max_degree + 1);
    a[0] = FieldElement(1);
    for (unsigned n = 1; n <= max_degree; ++n) {
      FieldElement v = e[0] * a[n - 1];
      if (n >= 2) v -= e[1] * a[n - 2];
      if (n >= 3) v += e[2] * a[n - 3];
      if (n >= 4) v -= e[3] * a[n - 4];
      a[n] = std::move(v);
    }
    Rational c(static_cast<long long>(count));
    for (unsigned n = 0; n <= max_degree; ++n) total[n].add_scaled(c, a[n]);
  }
  MolienSeries s;
  Rational inv_order(1, static_cast<long long>(g.order()));
  for (auto& t : total) {
    if (!t.is_rational()) throw std::logic_error("Molien coefficient is not rational");
    s.coefficients.push_back(t.coord(0) * inv_order);
  }
  return s;
}

std::vector<Rational> product_formula_series(const std::vector<unsigned>& degrees, unsigned max_degree) {
  std::vector<Rational> a(max_degree + 1);
  a[0] = Rational(1);
  for (unsigned d : degrees) {
    if (d == 0) throw std::invalid_argument("product_formula_series: degree 0");
    for (unsigned n = d; n <= max_degree; ++n) a[n] += a[n - d];
  }
  return a;
}

// ----------------------------------------------------------------- orbits

namespace {

std::string point_key(const Point4& p) {
  return p[0].str() + "|" + p[1].str() + "|" + p[2].str() + "|" + p[3].str();
}

}  // namespace

std::vector<Point4> orbit(const MatrixGroup& g, const Point4& v) {
  std::vector<Point4> out;
  std::unordered_map<std::string, bool> seen;
  for (const auto& el : g.elements()) {
    Point4 w = el.matrix() * v;
    if (seen.emplace(point_key(w), true).second) out.push_back(std::move(w));
  }
  return out;
}

MPoly orbit_power_sum(std::span<const Point4> orbit_points, unsigned d) {
  auto monos = HomogeneousIndex::enumerate(d);
  std::vector<FieldElement> acc(monos.size());
  for (const auto& w : orbit_points) {
    std::array<std::vector<FieldElement>, 4> pw;
    for (unsigned i = 0; i < 4; ++i) {
      pw[i].resize(d + 1);
      pw[i][0] = FieldElement(1);
      for (unsigned k = 1; k <= d; ++k) pw[i][k] = pw[i][k - 1] * w[i];
    }
    for (std::size_t k = 0; k < monos.size(); ++k) {
      const auto& e = monos[k].e;
      FieldElement v = pw[0][e[0]] * pw[1][e[1]];
      if (v.is_zero()) continue;
      v *= pw[2][e[2]];
      if (v.is_zero()) continue;
      acc[k].add_product(v, pw[3][e[3]]);
    }
  }
  // multinomial d! / (e0! e1! e2! e3!)
  for (std::size_t k = 0; k < monos.size(); ++k) {
    if (acc[k].is_zero()) continue;
    mpz_class num = 1;
    for (unsigned j = 2; j <= d; ++j) num *= j;
    mpz_class den = 1;
    for (unsigned i = 0; i < 4; ++i) {
      for (unsigned j = 2; j <= monos[k].e[i]; ++j) den *= j;
    }
    mpz_class q = num / den;
    acc[k] = acc[k].scaled(Rational(mpq_class(q)));
  }
  return MPoly::from_dense(Space::X, d, std::move(acc));
}

// ------------------------------------------------------------ linear algebra

namespace {

// Incrementally maintained reduced row echelon form of polynomial coefficient vectors.
class RowSpace {
 public:
  bool add(const MPoly& p) {
    MPoly v = p;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      FieldElement c = v.coefficient(pivots_[k]);
      if (!c.is_zero()) v -= rows_[k].scaled(c);
    }
    if (v.is_zero()) return false;
    v = v.monic();
    Monomial lead = v.leading().mono;
    for (auto& r : rows_) {
      FieldElement c = r.coefficient(lead);
      if (!c.is_zero()) r -= v.scaled(c);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(lead);
    return true;
  }
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  std::vector<MPoly> rows_;
  std::vector<Monomial> pivots_;
};

}  // namespace

std::vector<std::size_t> independent_subset(const std::vector<MPoly>& polys) {
  RowSpace space;
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    if (space.add(polys[k].with_space(Space::X))) out.push_back(k);
  }
  return out;
}

std::vector<FieldElement> solve_linear(std::vector<std::vector<FieldElement>> a, std::vector<FieldElement> b) {
  std::size_t n = b.size();
  if (a.size() != n) throw std::invalid_argument("solve_linear: dimension mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw SingularMatrix();
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    FieldElement inv = a[col][col].inverse();
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      FieldElement f = a[r][col] * inv;
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::vector<FieldElement> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = b[k] / a[k][k];
  return x;
}

// ------------------------------------------------------------ InvariantSpace

namespace {

const std::vector<Point4>& seed_points() {
  static const std::vector<Point4> seeds = {
      Point4{1, 0, 0, 0}, Point4{1, 1, 0, 0}, Point4{1, 1, 1, 1}, Point4{1, 1, 1, 0},
      Point4{2, 1, 0, 0}, Point4{3, 2, 1, 0}, Point4{1, 2, 3, 5}, Point4{7, 3, 2, 1},
  };
  return seeds;
}

// Every product of basics (with repetition) of total degree d.
void products_of_degree(const std::vector<std::pair<unsigned, MPoly>>& basics, std::size_t from, unsigned d,
                        const MPoly& acc, std::vector<MPoly>& out) {
  if (d == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t k = from; k < basics.size(); ++k) {
    if (basics[k].first > d) continue;
    products_of_degree(basics, k, d - basics[k].first, acc * basics[k].second, out);
  }
}

}  // namespace

InvariantSpace::InvariantSpace(const MatrixGroup& g, unsigned max_degree)
    : group_(&g), max_degree_(max_degree), molien_(molien_series(g, max_degree)) {
  if (!molien_.is_genuine()) throw std::logic_error("Molien series has non-integral coefficients");
  bases_.resize(max_degree + 1);
  bases_[0].push_back(MPoly::constant(Space::X, FieldElement(1)));
  std::vector<std::pair<unsigned, MPoly>> basics;
  std::vector<std::vector<Point4>> orbits(seed_points().size());
  for (unsigned d = 1; d <= max_degree; ++d) {
    std::size_t target = static_cast<std::size_t>(molien_.coefficients[d].numerator().get_si());
    if (target == 0) continue;
    RowSpace space;
    std::vector<MPoly> candidates;
    products_of_degree(basics, 0, d, MPoly::constant(Space::X, FieldElement(1)), candidates);
    for (auto& c : candidates) {
      if (space.rank() == target) break;
      if (space.add(c)) bases_[d].push_back(std::move(c));
    }
    for (std::size_t s = 0; s < seed_points().size() && space.rank() < target; ++s) {
      if (orbits[s].empty()) orbits[s] = orbit(g, seed_points()[s]);
      MPoly p = orbit_power_sum(std::span(orbits[s]), d);
      if (!space.add(p)) continue;
      bases_[d].push_back(p);
      basics.emplace_back(d, std::move(p));
      basic_degrees_.push_back(d);
    }
    if (space.rank() < target) {
      throw std::runtime_error("could not span the degree-" + std::to_string(d) + " invariants");
    }
  }
}

const std::vector<MPoly>& InvariantSpace::basis(unsigned d) const {
  if (d > max_degree_) throw std::out_of_range("InvariantSpace::basis: degree above maximum");
  return bases_[d];
}

MPoly InvariantSpace::reynolds(const MPoly& p) const {
  if (p.is_zero()) return p;
  if (p.space() != Space::X) throw SpaceMismatch();
  if (!p.is_homogeneous()) throw std::invalid_argument("InvariantSpace::reynolds: polynomial is not homogeneous");
  const auto& b = basis(static_cast<unsigned>(p.degree()));
  if (b.empty()) return MPoly(Space::X);
  std::size_t n = b.size();
  std::vector<std::vector<FieldElement>> gram(n, std::vector<FieldElement>(n));
  std::vector<FieldElement> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) gram[i][j] = gram[j][i] = fischer_pairing(b[i], b[j]);
    rhs[i] = fischer_pairing(b[i], p);
  }
  auto c = solve_linear(std::move(gram), std::move(rhs));
  MPoly out(Space::X);
  for (std::size_t j = 0; j < n; ++j) out += b[j].scaled(c[j]);
  return out.scaled(FieldElement(Rational(static_cast<long long>(group_->order()))));
}

std::string group_to_text(const MatrixGroup& g) {
  std::string out;
  for (std::size_t k = 0; k < g.order(); ++k) {
    if (k) out += '\n';
    const Matrix4& m = g.elements()[k].matrix();
    for (unsigned r = 0; r < 4; ++r) {
      for (unsigned c = 0; c < 4; ++c) {
        if (c) out += " , ";
        out += m(r, c).str();
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace reflinv
