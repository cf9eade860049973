#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "reflinv/mpoly.hpp"

namespace reflinv {

class NotOrthogonal : public std::domain_error {
 public:
  NotOrthogonal() : std::domain_error("matrix is not orthogonal") {}
};

class UnknownName : public std::invalid_argument {
 public:
  explicit UnknownName(const std::string& name) : std::invalid_argument("unknown name '" + name + "'") {}
};

class BoundExceeded : public std::runtime_error {
 public:
  explicit BoundExceeded(std::size_t bound)
      : std::runtime_error("group closure exceeded bound " + std::to_string(bound)) {}
};

/// Orthogonal 4x4 matrix over K (determinant +1 or -1).
class SO4Element {
 public:
  explicit SO4Element(Matrix4 m);

  const Matrix4& matrix() const noexcept { return m_; }
  FieldElement determinant() const { return m_.determinant(); }
  SO4Element inverse() const { return SO4Element(m_.transpose(), Trusted{}); }
  std::string key() const { return m_.key(); }

  friend SO4Element operator*(const SO4Element& a, const SO4Element& b) { return SO4Element(a.m_ * b.m_, Trusted{}); }
  friend bool operator==(const SO4Element& a, const SO4Element& b) { return a.m_ == b.m_; }

 private:
  struct Trusted {};
  SO4Element(Matrix4 m, Trusted) : m_(std::move(m)) {}
  Matrix4 m_;
};

/// Finite group stored as an explicit element list with lookup by canonical key.
class MatrixGroup {
 public:
  MatrixGroup() = default;
  MatrixGroup(std::string name, std::vector<SO4Element> elements);

  const std::string& name() const noexcept { return name_; }
  const std::vector<SO4Element>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(const SO4Element& g) const { return index_.count(g.key()) != 0; }
  /// Position of g in the element list, or order() when absent.
  std::size_t position(const SO4Element& g) const;

 private:
  std::string name_;
  std::vector<SO4Element> elements_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// The explicit generator matrices: (q2,1), (1,q2), (p3,1), ... and C, C'.
enum class NamedMatrix { Q2Left, Q2Right, P3Left, P3Right, P4Left, P4Right, P5Left, P5Right, C, CPrime };

SO4Element named_matrix(NamedMatrix which);
std::string_view named_matrix_label(NamedMatrix which);

/// Known names: G6 G8 G12 F4 H4 Ttilde1 Otilde1 Itilde1 Ttilde2 Otilde2 Itilde2.
std::vector<SO4Element> builtin_generators(const std::string& name);
std::vector<std::string> builtin_group_names();

constexpr std::size_t kDefaultClosureBound = 20000;

/// Breadth-first closure; element order is deterministic (identity first, then right products by generators).
MatrixGroup group_closure(const std::vector<SO4Element>& gens, std::size_t bound = kDefaultClosureBound,
                          std::string name = {});

/// Closure of builtin_generators(name), memoized per process.
const MatrixGroup& builtin_group(const std::string& name);

/// Plain sum over the given elements of g . p.
MPoly reynolds_sum(std::span<const SO4Element> elements, const MPoly& p);
inline MPoly reynolds_sum(const MatrixGroup& g, const MPoly& p) { return reynolds_sum(std::span(g.elements()), p); }

/**
 * G written as a disjoint union of cosets c * (R L), where L and R are
 * commuting subgroups. The group sum then factors as
 *   sum_G g.p = sum_c c . ( (1/|L cap R|) sum_r r . ( sum_l l . p ) ).
 */
struct GroupFactorization {
  std::vector<SO4Element> coset_reps;
  std::vector<SO4Element> left;
  std::vector<SO4Element> right;
  std::size_t overlap = 1;
  std::size_t group_order = 0;
};

GroupFactorization factorize(const MatrixGroup& g, const MatrixGroup& left, const MatrixGroup& right);

MPoly reynolds_sum_factored(const GroupFactorization& f, const MPoly& p);

/// Coefficients of the Hilbert series of the invariant ring, degrees 0..N.
struct MolienSeries {
  std::vector<Rational> coefficients;

  /// Coefficient 0 is 1 and every coefficient is a non-negative integer.
  bool is_genuine() const;
};

MolienSeries molien_series(const MatrixGroup& g, unsigned max_degree);

/// Expansion of 1 / prod (1 - t^d) through max_degree.
std::vector<Rational> product_formula_series(const std::vector<unsigned>& degrees, unsigned max_degree);

using Point4 = std::array<FieldElement, 4>;

/// Orbit of a vector under the group, deduplicated, in first-visit order.
std::vector<Point4> orbit(const MatrixGroup& g, const Point4& v);

/// sum over the orbit of (w . x)^d.
MPoly orbit_power_sum(std::span<const Point4> orbit_points, unsigned d);

/**
 * Spanning sets of the invariant spaces of a finite orthogonal group, built
 * from products of orbit power sums and certified against the Molien series.
 *
 * Because the group is orthogonal, the Reynolds average is the projection
 * onto the invariants that is self-adjoint for fischer_pairing, so
 * sum_g g.p can be recovered from pairings with a basis of invariants.
 */
class InvariantSpace {
 public:
  InvariantSpace(const MatrixGroup& g, unsigned max_degree);

  unsigned max_degree() const noexcept { return max_degree_; }
  const MolienSeries& molien() const noexcept { return molien_; }
  /// Basis of the degree-d invariants; its size equals the Molien coefficient.
  const std::vector<MPoly>& basis(unsigned d) const;
  /// Degrees at which a new basic invariant had to be introduced.
  const std::vector<unsigned>& basic_degrees() const noexcept { return basic_degrees_; }
  /// sum_g g . p for homogeneous p, via the self-adjoint projection.
  MPoly reynolds(const MPoly& p) const;

 private:
  const MatrixGroup* group_;
  unsigned max_degree_;
  MolienSeries molien_;
  std::vector<std::vector<MPoly>> bases_;
  std::vector<unsigned> basic_degrees_;
};

/// Row-reduces the coefficient vectors and returns indices of a maximal independent subset.
std::vector<std::size_t> independent_subset(const std::vector<MPoly>& polys);

/// Solves the square system A x = b over K by Gaussian elimination.
std::vector<FieldElement> solve_linear(std::vector<std::vector<FieldElement>> a, std::vector<FieldElement> b);

/// Text export: one 4-line block per matrix (entries separated by " , "), blocks separated by blank lines.
std::string group_to_text(const MatrixGroup& g);

}  // namespace reflinv
