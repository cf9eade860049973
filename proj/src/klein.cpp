#include "reflinv/klein.hpp"

#include <map>
#include <mutex>

namespace reflinv {

KleinName parse_klein_name(const std::string& name) {
  if (name == "t") return KleinName::t;
  if (name == "W") return KleinName::W;
  if (name == "chi") return KleinName::chi;
  if (name == "f") return KleinName::f;
  if (name == "H") return KleinName::H;
  if (name == "Tau") return KleinName::Tau;
  throw UnknownName(name);
}

std::string klein_name_str(KleinName n) {
  switch (n) {
    case KleinName::t: return "t";
    case KleinName::W: return "W";
    case KleinName::chi: return "chi";
    case KleinName::f: return "f";
    case KleinName::H: return "H";
    case KleinName::Tau: return "Tau";
  }
  return "?";
}

unsigned klein_degree(KleinName n) {
  switch (n) {
    case KleinName::t: return 6;
    case KleinName::W: return 8;
    case KleinName::chi: return 12;
    case KleinName::f: return 12;
    case KleinName::H: return 20;
    case KleinName::Tau: return 30;
  }
  return 0;
}

KleinForm klein_form(KleinName name, unsigned slot) {
  if (slot != 1 && slot != 2) throw std::invalid_argument("slot must be 1 or 2");
  unsigned lo = slot == 1 ? 0 : 2;
  std::vector<Term> terms;
  auto add = [&](long long c, unsigned a, unsigned b) {
    Monomial m;
    m.e[lo] = static_cast<std::uint16_t>(a);
    m.e[lo + 1] = static_cast<std::uint16_t>(b);
    terms.push_back({m, FieldElement(c)});
  };
  switch (name) {
    case KleinName::t:
      add(1, 5, 1), add(-1, 1, 5);
      break;
    case KleinName::W:
      add(1, 8, 0), add(14, 4, 4), add(1, 0, 8);
      break;
    case KleinName::chi:
      add(1, 12, 0), add(-33, 8, 4), add(-33, 4, 8), add(1, 0, 12);
      break;
    case KleinName::f:
      add(1, 11, 1), add(11, 6, 6), add(-1, 1, 11);
      break;
    case KleinName::H:
      add(-1, 20, 0), add(-1, 0, 20), add(228, 15, 5), add(-228, 5, 15), add(-494, 10, 10);
      break;
    case KleinName::Tau:
      add(1, 30, 0), add(1, 0, 30), add(522, 25, 5), add(-522, 5, 25), add(-10005, 20, 10), add(-10005, 10, 20);
      break;
  }
  return KleinForm{name, slot, MPoly::from_terms(Space::Z, std::move(terms))};
}

MPoly phi(const MPoly& p) {
  if (p.space() != Space::X) throw SpaceMismatch();
  // x in terms of u = z0z2, s = z1z3, v = z0z3, w = z1z2.
  const FieldElement h(Rational(1, 2));
  const FieldElement mh = FieldElement::i().scaled(Rational(-1, 2));
  Matrix4 a = Matrix4::from_rows({{{h, h, 0, 0}, {mh, -mh, 0, 0}, {0, 0, h, -h}, {0, 0, mh, mh}}});
  MPoly in_pairs = substitute_matrix(p, a);
  std::vector<Term> terms;
  terms.reserve(in_pairs.size());
  for (const auto& t : in_pairs.terms()) {
    const auto& e = t.mono.e;  // u^e0 s^e1 v^e2 w^e3
    Monomial m;
    m.e = {static_cast<std::uint16_t>(e[0] + e[2]), static_cast<std::uint16_t>(e[1] + e[3]),
           static_cast<std::uint16_t>(e[0] + e[3]), static_cast<std::uint16_t>(e[1] + e[2])};
    terms.push_back({m, t.coeff});
  }
  return MPoly::from_terms(Space::Z, std::move(terms));
}

MPoly verify_syzygy(SyzygyKind which, unsigned slot) {
  if (which == SyzygyKind::Tetrahedral) {
    MPoly t = klein_form(KleinName::t, slot).poly;
    MPoly w = klein_form(KleinName::W, slot).poly;
    MPoly chi = klein_form(KleinName::chi, slot).poly;
    return t.pow(4).scaled(FieldElement(108)) - w.pow(3) + chi.pow(2);
  }
  MPoly f = klein_form(KleinName::f, slot).poly;
  MPoly h = klein_form(KleinName::H, slot).poly;
  MPoly tau = klein_form(KleinName::Tau, slot).poly;
  return tau.pow(2) + h.pow(3) - f.pow(5).scaled(FieldElement(1728));
}

std::optional<FieldElement> proportionality(const MPoly& value, const MPoly& target) {
  if (target.is_zero()) {
    if (value.is_zero()) return FieldElement();
    return std::nullopt;
  }
  const Term& lead = target.leading();
  FieldElement lambda = value.coefficient(lead.mono) / lead.coeff;
  if (!(value == target.scaled(lambda))) return std::nullopt;
  return lambda;
}

FieldElement phi_factor(const MPoly& p, const MPoly& target) {
  MPoly img = phi(p);
  if (img.is_zero()) throw ZeroImage();
  auto lambda = proportionality(img, target);
  if (!lambda || lambda->is_zero()) throw NoSuchScalar("phi-image is not a multiple of the target");
  return *lambda;
}

namespace {

Matrix4 block(const Mat2& m, unsigned slot) {
  Matrix4 a = Matrix4::identity();
  unsigned lo = slot == 1 ? 0 : 2;
  for (unsigned r = 0; r < 2; ++r) {
    for (unsigned c = 0; c < 2; ++c) a(lo + r, lo + c) = m[r][c];
  }
  return a;
}

}  // namespace

MPoly slot_action(const MPoly& p, const SU2Element& g, unsigned slot) {
  if (slot != 1 && slot != 2) throw std::invalid_argument("slot must be 1 or 2");
  return substitute_matrix(p, block(g.inverse().matrix(), slot));
}

MPoly z_action(const MPoly& p, const SU2Element& g1, const SU2Element& g2) {
  Matrix4 inv = block(g1.inverse().matrix(), 1);
  Mat2 g2t = g2.inverse().inverse_transpose().matrix();  // (g2^-T)^-1 = g2^T
  for (unsigned r = 0; r < 2; ++r) {
    for (unsigned c = 0; c < 2; ++c) inv(2 + r, 2 + c) = g2t[r][c];
  }
  return substitute_matrix(p, inv);
}

std::optional<std::size_t> first_non_fixing(const MPoly& form, const std::vector<SU2Element>& group, unsigned slot) {
  for (std::size_t k = 0; k < group.size(); ++k) {
    if (!(slot_action(form, group[k], slot) == form)) return k;
  }
  return std::nullopt;
}

MPoly oriented_icosahedral_form(KleinName name, unsigned slot) {
  static std::mutex mu;
  static std::map<std::pair<KleinName, unsigned>, MPoly> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(name, slot);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  MPoly form = klein_form(name, slot).poly;
  MPoly sum(Space::Z);
  for (const auto& g : binary_group(BinaryKind::I)) {
    sum += slot_action(form, slot == 1 ? g : g.inverse_transpose(), slot);
  }
  if (sum.is_zero()) throw ZeroImage();
  return cache.emplace(key, sum.monic()).first->second;
}

bool no_relation_below(SyzygyKind which, unsigned bound) {
  std::array<KleinName, 3> names = which == SyzygyKind::Tetrahedral
                                       ? std::array{KleinName::t, KleinName::W, KleinName::chi}
                                       : std::array{KleinName::f, KleinName::H, KleinName::Tau};
  std::array<MPoly, 3> forms;
  std::array<unsigned, 3> deg;
  for (unsigned k = 0; k < 3; ++k) {
    forms[k] = klein_form(names[k], 1).poly;
    deg[k] = klein_degree(names[k]);
  }
  for (unsigned d = 1; d < bound; ++d) {
    std::vector<MPoly> products;
    for (unsigned a = 0; a * deg[0] <= d; ++a) {
      for (unsigned b = 0; a * deg[0] + b * deg[1] <= d; ++b) {
        unsigned rest = d - a * deg[0] - b * deg[1];
        if (rest % deg[2]) continue;
        products.push_back(forms[0].pow(a) * forms[1].pow(b) * forms[2].pow(rest / deg[2]));
      }
    }
    if (independent_subset(products).size() != products.size()) return false;
  }
  return true;
}

}  // namespace reflinv
