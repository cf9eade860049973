#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "reflinv/groups.hpp"

namespace reflinv {

using Vec2 = std::array<FieldElement, 2>;
using Mat2 = std::array<std::array<FieldElement, 2>, 2>;

class NotUnitary : public std::domain_error {
 public:
  NotUnitary() : std::domain_error("matrix is not in SU(2)") {}
};

/// Raised when an eigenvalue or eigenvector would need a field larger than K.
class OutsideField : public std::domain_error {
 public:
  explicit OutsideField(const std::string& what) : std::domain_error(what) {}
};

class CentralElement : public std::invalid_argument {
 public:
  CentralElement() : std::invalid_argument("element is central; every point is fixed") {}
};

class DegenerateCouple : public std::logic_error {
 public:
  DegenerateCouple() : std::logic_error("couple does not span a unique plane") {}
};

struct Quaternion {
  FieldElement a, b, c, d;  // a + b i + c j + d k

  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
};

/// The quaternions whose left multiplications are (q2,1), (p3,1), (p4,1), (p5,1).
Quaternion quaternion_q2();
Quaternion quaternion_p3();
Quaternion quaternion_p4();
Quaternion quaternion_p5();

class SU2Element {
 public:
  explicit SU2Element(Mat2 m);
  static SU2Element identity();
  /// a + bi + cj + dk -> [[a+bi, c+di], [-c+di, a-bi]].
  static SU2Element from_quaternion(const Quaternion& q);

  const Mat2& matrix() const noexcept { return m_; }
  FieldElement trace() const { return m_[0][0] + m_[1][1]; }
  bool is_central() const;
  SU2Element inverse() const;
  /// Inverse transpose, which for SU(2) is the entrywise conjugate.
  SU2Element inverse_transpose() const;
  Vec2 apply(const Vec2& v) const;
  std::string key() const;

  friend SU2Element operator*(const SU2Element& a, const SU2Element& b);
  friend bool operator==(const SU2Element& a, const SU2Element& b) { return a.m_ == b.m_; }

 private:
  struct Trusted {};
  SU2Element(Mat2 m, Trusted) : m_(std::move(m)) {}
  Mat2 m_;
};

enum class BinaryKind { T, O, I };

BinaryKind parse_binary_kind(const std::string& name);
std::vector<SU2Element> quaternion_generators(BinaryKind kind);
/// Closure of quaternion_generators(kind); identity first. Orders 24, 48, 120.
const std::vector<SU2Element>& binary_group(BinaryKind kind);

/// The 4x4 matrix of X -> g1 X g2^-1 in x-coordinates.
Matrix4 sigma(const SU2Element& g1, const SU2Element& g2);

/// [[x0+ix1, x2+ix3], [-x2+ix3, x0-ix1]].
Mat2 identify(const Point4& x);

/// The x-point whose identified matrix is v w^T.
Point4 segre(const Vec2& v, const Vec2& w);

/// Scales so the first nonzero coordinate is 1.
Vec2 normalize_projective(const Vec2& v);

enum class Ruling { First, Second };

struct EigenLine {
  SU2Element source;
  FieldElement eigenvalue;
  Vec2 eigenvector;
  Ruling ruling;
};

/// Both eigenpairs of p acting on columns, sorted by eigenvalue rendering.
std::array<EigenLine, 2> fixed_points(const SU2Element& p);

/// The second-ruling line of p for eigenvalue alpha: the eigenvector of p^-T.
EigenLine second_ruling_line(const SU2Element& p, const FieldElement& alpha);

struct Couple {
  EigenLine left;
  EigenLine right;
};

Couple make_couple(const EigenLine& left);

/// Monic linear form vanishing on both lines of the couple.
MPoly couple_plane(const Couple& c);

struct LineOrbit {
  std::size_t length = 0;
  std::size_t stabilizer_order = 0;
  /// Representative points in P1; empty when only bookkeeping was possible.
  std::vector<Vec2> points;
  std::optional<FieldElement> eigenvalue;
};

/// Orbits of fixed points of non-central elements, sorted by length.
/// For I only lengths and stabilizer orders are produced.
std::vector<LineOrbit> line_orbits(BinaryKind kind);

/// Product of the couple planes over the orbit: T6, O8 or O12.
MPoly orbit_plane_product(const std::string& name);

/// Reynolds sum over Ttilde1 of the matching orbit product: F6, F8 or F12.
MPoly invariant_from_orbit_raw(const std::string& name);
MPoly invariant_from_orbit(const std::string& name);

class UnbalancedBidegree : public std::invalid_argument {
 public:
  UnbalancedBidegree() : std::invalid_argument("polynomial is not of balanced bidegree (n,n)") {}
};

/// Right inverse of phi on bidegree (n,n) polynomials.
MPoly lift(const MPoly& p);

enum class LiftRoute { Factored, Projection, Direct };

struct LiftResult {
  MPoly invariant;           // monic
  MPoly raw;                 // unnormalized group sum
  std::string target;        // e.g. "f1*f2"
  bool used_oriented = false;
};

/// Γ12 (name G12deg12), G20, G30 over H4; F6L, F8L, F12L over F4.
LiftResult invariant_by_lift(const std::string& name, LiftRoute route = LiftRoute::Factored);

}  // namespace reflinv
