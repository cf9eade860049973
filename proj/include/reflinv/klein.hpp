#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reflinv/geometry.hpp"

namespace reflinv {

enum class KleinName { t, W, chi, f, H, Tau };

KleinName parse_klein_name(const std::string& name);
std::string klein_name_str(KleinName n);
unsigned klein_degree(KleinName n);

struct KleinForm {
  KleinName name;
  unsigned slot;  // 1: z0,z1   2: z2,z3
  MPoly poly;
};

KleinForm klein_form(KleinName name, unsigned slot);

/// Bidegree-(n,n) image of a degree-n form under the substitution through z0z2, z1z3, z0z3, z1z2.
MPoly phi(const MPoly& p);

enum class SyzygyKind { Tetrahedral, Icosahedral };

/// 108 t^4 - W^3 + chi^2, or Tau^2 + H^3 - 1728 f^5, in the given slot.
MPoly verify_syzygy(SyzygyKind which, unsigned slot);

class NoSuchScalar : public std::domain_error {
 public:
  explicit NoSuchScalar(const std::string& what) : std::domain_error(what) {}
};

class ZeroImage : public std::domain_error {
 public:
  ZeroImage() : std::domain_error("phi-image is zero; the polynomial is a multiple of q") {}
};

/// lambda with target = lambda * other, or nullopt when they are not proportional. Zero is proportional to zero only.
std::optional<FieldElement> proportionality(const MPoly& value, const MPoly& target);

/// The unique lambda with phi(p) = lambda * target.
FieldElement phi_factor(const MPoly& p, const MPoly& target);

/// (M . P)(z) = P(M^-1 z) with M = blockdiag(g1, g2^-T): the z-side of (g1,g2) acting on x-space.
MPoly z_action(const MPoly& p, const SU2Element& g1, const SU2Element& g2);

/// Action of g on the variables of one slot: P(g^-1 z) in those two variables.
MPoly slot_action(const MPoly& p, const SU2Element& g, unsigned slot);

/// First binary-group element moving the form (exactly), or nullopt when it is invariant.
std::optional<std::size_t> first_non_fixing(const MPoly& form, const std::vector<SU2Element>& group, unsigned slot);

/**
 * Klein's form symmetrized over the binary icosahedral group realized from
 * quaternion_generators(I), in the given slot: slot 1 uses the column
 * action, slot 2 the inverse-transpose action, matching phi's equivariance.
 * Monic.
 */
MPoly oriented_icosahedral_form(KleinName name, unsigned slot);

/// True when the monomials in the given forms with weighted degree below the bound are linearly independent.
bool no_relation_below(SyzygyKind which, unsigned bound);

}  // namespace reflinv
