#include "reflinv/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

namespace reflinv {

// ------------------------------------------------------------- rendering

namespace {

std::string monomial_str(const Monomial& m, Space s) {
  std::string out;
  char var = s == Space::X ? 'x' : 'z';
  for (unsigned k = 0; k < 4; ++k) {
    if (m.e[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += var;
    out += std::to_string(k);
    if (m.e[k] > 1) out += "^" + std::to_string(m.e[k]);
  }
  return out;
}

std::string term_str(const Term& t, Space s, bool leading) {
  FieldElement c = t.coeff;
  bool single = __builtin_popcount(c.support()) == 1;
  bool neg = single && c.coord(static_cast<unsigned>(__builtin_ctz(c.support()))).sign() < 0;
  if (neg) c = -c;
  std::string mono = monomial_str(t.mono, s);
  std::string coeff = single ? c.str() : "(" + c.str() + ")";
  std::string body;
  if (mono.empty()) {
    body = coeff;
  } else if (c.is_one()) {
    body = mono;
  } else {
    body = coeff + "*" + mono;
  }
  if (leading) return neg ? "-" + body : body;
  return (neg ? " - " : " + ") + body;
}

std::string pretty_truncated(const MPoly& p, std::size_t max_terms) {
  if (p.is_zero()) return "0";
  std::string out;
  std::size_t n = std::min(max_terms, p.size());
  for (std::size_t k = 0; k < n; ++k) out += term_str(p.terms()[k], p.space(), k == 0);
  if (p.size() > n) out += " + ... (" + std::to_string(p.size()) + " terms)";
  return out;
}

}  // namespace

std::string pretty(const MPoly& p) { return pretty_truncated(p, p.size()); }

// ------------------------------------------------------------------ checks

CheckReport check_invariance(const MPoly& p, const std::vector<SO4Element>& gens) {
  CheckReport r;
  r.name = "invariance";
  for (std::size_t k = 0; k < gens.size(); ++k) {
    MPoly gp = act_with_inverse(p, gens[k].matrix().transpose());
    if (!(gp == p)) {
      r.witness = "generator #" + std::to_string(k) + ": g.p = " + pretty_truncated(gp, 4) +
                  "; g.p - p = " + pretty_truncated(gp - p, 3);
      return r;
    }
  }
  r.pass = true;
  r.witness = "fixed by all " + std::to_string(gens.size()) + " generators";
  return r;
}

CheckReport check_nondivisibility(const MPoly& p, const MPoly& d, const std::vector<Point4>& witness_points) {
  CheckReport r;
  r.name = "nondivisibility";
  DivRem dr = divrem(p, d);
  if (dr.remainder.is_zero()) {
    r.witness = "remainder 0; quotient " + pretty_truncated(dr.quotient, 3);
    return r;
  }
  r.pass = true;
  r.witness = "remainder " + pretty_truncated(dr.remainder, 2);
  for (const auto& pt : witness_points) {
    FieldElement dv = evaluate(d, pt);
    FieldElement pv = evaluate(p, pt);
    r.witness += "; d(pt)=" + dv.str() + ", p(pt)=" + pv.str();
    if (!dv.is_zero() || pv.is_zero()) r.pass = false;
  }
  return r;
}

CheckReport check_jacobian_independence(const std::array<MPoly, 4>& polys) {
  CheckReport r;
  r.name = "jacobian";
  std::array<std::array<MPoly, 4>, 4> jac;
  Matrix4 at;
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) {
      jac[i][j] = partial(polys[i], j);
      at(i, j) = evaluate(jac[i][j], jacobian_point());
    }
  }
  FieldElement det = at.determinant();
  if (!det.is_zero()) {
    r.pass = true;
    r.witness = "det J(1,2,3,5) = " + det.str();
    return r;
  }
  // Symbolic determinant over all 24 permutations.
  std::array<unsigned, 4> perm{0, 1, 2, 3};
  MPoly total(polys[0].space());
  do {
    int inversions = 0;
    for (unsigned a = 0; a < 4; ++a) {
      for (unsigned b = a + 1; b < 4; ++b) inversions += perm[a] > perm[b];
    }
    MPoly prod = jac[0][perm[0]] * jac[1][perm[1]] * jac[2][perm[2]] * jac[3][perm[3]];
    if (inversions % 2) {
      total -= prod;
    } else {
      total += prod;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (total.is_zero()) {
    r.witness = "det J(1,2,3,5) = 0 and the symbolic determinant is 0";
  } else {
    r.pass = true;
    r.witness = "det J(1,2,3,5) = 0 but symbolic determinant has leading term " + pretty_truncated(total, 1);
  }
  return r;
}

CheckReport check_degrees(const MatrixGroup& g, const std::vector<unsigned>& degrees, unsigned through) {
  CheckReport r;
  r.name = "degrees";
  unsigned top = 0;
  std::size_t product = 1;
  for (unsigned d : degrees) {
    top = std::max(top, d);
    product *= d;
  }
  if (through == 0) through = top;
  r.witness = "product " + std::to_string(product) + ", |G| = " + std::to_string(g.order());
  if (product != g.order()) return r;
  MolienSeries m = molien_series(g, through);
  auto expected = product_formula_series(degrees, through);
  for (unsigned n = 0; n <= through; ++n) {
    if (!(m.coefficients[n] == expected[n])) {
      r.witness += "; Molien t^" + std::to_string(n) + " coefficient " + m.coefficients[n].str() + " vs " +
                   expected[n].str();
      return r;
    }
  }
  r.pass = true;
  r.witness += "; Molien series matches through t^" + std::to_string(through);
  return r;
}

Scope parse_scope(const std::string& s) {
  if (s == "quick") return Scope::Quick;
  if (s == "full") return Scope::Full;
  throw UnknownName(s);
}

double budget_from_environment() {
  const char* v = std::getenv("REFLINV_BUDGET_SECONDS");
  if (!v) return 3600;
  char* end = nullptr;
  double d = std::strtod(v, &end);
  if (end == v || d <= 0) return 3600;
  return d;
}

// ------------------------------------------------------------------ suite

namespace {

class Context {
 public:
  const MPoly& geometric(const std::string& name) {
    return memo("geometric:" + name, [&] { return invariant_from_orbit_raw(name); });
  }
  const LiftResult& lifted(const std::string& name) {
    auto it = lifts_.find(name);
    if (it == lifts_.end()) it = lifts_.emplace(name, invariant_by_lift(name)).first;
    return it->second;
  }
  const MPoly& listed(const std::string& name) {
    return memo("listed:" + name, [&] {
      if (name == "F6") return listed_F6();
      if (name == "F8") return listed_F8();
      if (name == "F12") return listed_F12();
      throw UnknownName(name);
    });
  }
  MPoly klein_product(KleinName k) { return klein_form(k, 1).poly * klein_form(k, 2).poly; }

 private:
  const MPoly& memo(const std::string& key, const std::function<MPoly()>& make) {
    auto it = polys_.find(key);
    if (it == polys_.end()) it = polys_.emplace(key, make()).first;
    return it->second;
  }
  std::map<std::string, MPoly> polys_;
  std::map<std::string, LiftResult> lifts_;
};

struct CheckDef {
  std::string name;
  int criterion;
  bool full_only;
  std::function<CheckReport(Context&)> run;
};

CheckReport verdict(bool pass, std::string witness) {
  CheckReport r;
  r.pass = pass;
  r.witness = std::move(witness);
  return r;
}

KleinName tetra_form_for(const std::string& f) {
  if (f == "F6") return KleinName::t;
  if (f == "F8") return KleinName::W;
  return KleinName::chi;
}

std::string opt_str(const std::optional<FieldElement>& v) { return v ? v->str() : "none"; }

std::vector<CheckDef> catalogue() {
  std::vector<CheckDef> defs;
  auto add = [&](std::string name, int criterion, bool full_only, std::function<CheckReport(Context&)> run) {
    defs.push_back({std::move(name), criterion, full_only, std::move(run)});
  };
  const std::vector<std::string> fnames{"F6", "F8", "F12"};

  // 1: group orders
  const std::vector<std::pair<std::string, std::size_t>> orders{
      {"G6", 288}, {"G8", 1152}, {"G12", 7200}, {"F4", 1152}, {"H4", 14400}};
  for (const auto& [g, n] : orders) {
    add("groups.order." + g, 1, false, [g, n](Context&) {
      std::size_t got = builtin_group(g).order();
      return verdict(got == n, "|" + g + "| = " + std::to_string(got) + " (expected " + std::to_string(n) + ")");
    });
  }

  // 2: listed polynomials fixed by the [3,4,3] generators
  for (const auto& f : fnames) {
    add("invariance.listed." + f, 2, false,
        [f](Context& c) { return check_invariance(c.listed(f), builtin_generators("F4")); });
  }

  // 3: phi scalars
  add("phi.q", 3, false, [](Context&) {
    MPoly img = phi(quadric_q());
    return verdict(img.is_zero(), "phi(q) = " + pretty_truncated(img, 3));
  });
  const std::vector<std::pair<std::string, Rational>> scalars{{"F6", Rational(-13, 16)}, {"F8", Rational(3, 64)}};
  for (const auto& [f, expected] : scalars) {
    add("phi.listed." + f, 3, false, [f, expected](Context& c) {
      std::string target = klein_name_str(tetra_form_for(f));
      auto lambda = proportionality(phi(c.listed(f)), c.klein_product(tetra_form_for(f)));
      bool ok = lambda && *lambda == FieldElement(expected);
      return verdict(ok, "phi(" + f + ") = " + opt_str(lambda) + " * " + target + "1*" + target + "2 (expected " +
                             expected.str() + ")");
    });
  }
  add("phi.listed.F12", 3, false, [](Context& c) {
    MPoly chi = c.klein_product(KleinName::chi);
    auto display = proportionality(phi(c.listed("F12")), chi);
    if (display && *display == FieldElement(Rational(3, 256))) {
      return verdict(true, "phi(F12) = 3/256 * chi1*chi2");
    }
    // Downgraded form: the geometric F12 must map to a nonzero multiple of chi1*chi2.
    auto geometric = proportionality(phi(c.geometric("F12")), chi);
    auto corrected = proportionality(phi(listed_F12(F12Variant::Corrected)), chi);
    bool ok = geometric && !geometric->is_zero();
    return verdict(ok, "listed display: phi(F12) is " +
                           (display ? display->str() + " * chi1*chi2" : std::string("not a multiple of chi1*chi2")) +
                           "; downgraded to phi(geometric F12) = " + opt_str(geometric) +
                           " * chi1*chi2; display with x_i^8x_j^2x_k^2 coefficient 1899/4 gives " +
                           opt_str(corrected));
  });

  // 4: point witnesses and non-divisibility
  struct PointCheck {
    std::string label;
    std::string poly;
    int point;
    Rational expected;
  };
  const std::vector<PointCheck> points{{"q(p1)", "q", 1, 0},        {"q(p2)", "q", 2, 0},
                                       {"F6(p1)", "F6", 1, 26},     {"F8(p2)", "F8", 2, 12},
                                       {"F12(p2)", "F12", 2, 32},   {"F6(p2)", "F6", 2, 0}};
  for (const auto& pc : points) {
    add("points." + pc.label, 4, false, [pc](Context& c) {
      MPoly p = pc.poly == "q" ? quadric_q() : c.listed(pc.poly);
      FieldElement v = evaluate(p, pc.point == 1 ? point_p1() : point_p2());
      return verdict(v == FieldElement(pc.expected), pc.label + " = " + v.str() + " (expected " + pc.expected.str() + ")");
    });
  }
  const std::vector<std::pair<std::string, int>> nondiv{{"F6", 1}, {"F8", 2}, {"F12", 2}};
  for (const auto& [f, pt] : nondiv) {
    add("nondivisibility.listed." + f + ".q", 4, false, [f, pt](Context& c) {
      return check_nondivisibility(c.listed(f), quadric_q(), {pt == 1 ? point_p1() : point_p2()});
    });
    add("nondivisibility.geometric." + f + ".q", 4, false,
        [f](Context& c) { return check_nondivisibility(c.geometric(f), quadric_q()); });
  }
  add("nondivisibility.listed.F12.F6", 4, false,
      [](Context& c) { return check_nondivisibility(c.listed("F12"), c.listed("F6"), {point_p2()}); });
  add("nondivisibility.geometric.F12.F6", 4, false,
      [](Context& c) { return check_nondivisibility(c.geometric("F12"), c.geometric("F6")); });

  // 5: syzygies
  for (unsigned slot : {1u, 2u}) {
    add("syzygy.tetrahedral." + std::to_string(slot), 5, false, [slot](Context&) {
      MPoly r = verify_syzygy(SyzygyKind::Tetrahedral, slot);
      return verdict(r.is_zero(), "108t^4 - W^3 + chi^2 = " + pretty_truncated(r, 3));
    });
    add("syzygy.icosahedral." + std::to_string(slot), 5, false, [slot](Context&) {
      MPoly r = verify_syzygy(SyzygyKind::Icosahedral, slot);
      return verdict(r.is_zero(), "Tau^2 + H^3 - 1728f^5 = " + pretty_truncated(r, 3));
    });
  }
  add("klein.no_relation.tetrahedral", 0, false, [](Context&) {
    return verdict(no_relation_below(SyzygyKind::Tetrahedral, 24), "t, W, chi: monomials below degree 24 independent");
  });
  add("klein.no_relation.icosahedral", 0, false, [](Context&) {
    return verdict(no_relation_below(SyzygyKind::Icosahedral, 60), "f, H, Tau: monomials below degree 60 independent");
  });
  for (KleinName k : {KleinName::t, KleinName::W, KleinName::chi, KleinName::f, KleinName::H, KleinName::Tau}) {
    bool tetra = k == KleinName::t || k == KleinName::W || k == KleinName::chi;
    add("klein.invariance." + klein_name_str(k), 0, false, [k, tetra](Context&) {
      const auto& group = binary_group(tetra ? BinaryKind::T : BinaryKind::I);
      auto bad = first_non_fixing(klein_form(k, 1).poly, group, 1);
      if (!bad) return verdict(true, "fixed by all " + std::to_string(group.size()) + " elements");
      const Mat2& m = group[*bad].matrix();
      return verdict(false, "moved by element #" + std::to_string(*bad) + " [[" + m[0][0].str() + ", " +
                                m[0][1].str() + "], [" + m[1][0].str() + ", " + m[1][1].str() + "]]");
    });
  }
  add("klein.oriented.syzygy", 0, false, [](Context&) {
    MPoly f = oriented_icosahedral_form(KleinName::f, 1);
    MPoly h = oriented_icosahedral_form(KleinName::H, 1);
    MPoly t = oriented_icosahedral_form(KleinName::Tau, 1);
    auto idx = independent_subset({h.pow(3), f.pow(5), t.pow(2)});
    bool ok = idx == std::vector<std::size_t>{0, 1};
    return verdict(ok, "rank of {H'^3, f'^5, Tau'^2} = " + std::to_string(idx.size()));
  });

  // 6: geometric reconstruction
  for (const auto& n : {std::string("T6"), std::string("O8"), std::string("O12")}) {
    add("geometry.product." + n, 6, false, [n](Context&) {
      auto lambda = proportionality(orbit_plane_product(n), listed_product(n));
      return verdict(lambda && !lambda->is_zero(), "constructed = " + opt_str(lambda) + " * listed");
    });
  }
  for (const auto& f : fnames) {
    add("geometry.reynolds." + f, 6, false, [f](Context& c) {
      const MPoly& g = c.geometric(f);
      auto lambda = proportionality(g, c.listed(f));
      std::string w = "Reynolds sum = " + opt_str(lambda) + " * listed " + f;
      if (!lambda) {
        w = "Reynolds sum is not a multiple of listed " + f;
        auto phis = proportionality(phi(g), phi(c.listed(f)));
        w += "; phi-images related by " + opt_str(phis);
        if (f == "F12") {
          w += "; Reynolds sum = " + opt_str(proportionality(g, listed_F12(F12Variant::Corrected))) +
               " * display with 1899/4";
        }
      }
      return verdict(lambda && !lambda->is_zero(), w);
    });
    add("geometry.invariance." + f, 6, false,
        [f](Context& c) { return check_invariance(c.geometric(f), builtin_generators("F4")); });
    add("geometry.real." + f, 6, false, [f](Context& c) {
      const MPoly& g = c.geometric(f);
      return verdict(g.has_real_coefficients() && g == g.conj(), "leading term " + pretty_truncated(g, 1));
    });
  }

  // 7: Jacobian certificates
  add("jacobian.F", 7, false, [](Context& c) {
    return check_jacobian_independence({quadric_q(), c.geometric("F6"), c.geometric("F8"), c.geometric("F12")});
  });
  add("jacobian.Gamma", 7, true, [](Context& c) {
    return check_jacobian_independence(
        {quadric_q(), c.lifted("G12deg12").raw, c.lifted("G20").raw, c.lifted("G30").raw});
  });

  // 8: degrees and Molien series
  add("degrees.F4", 8, false, [](Context&) { return check_degrees(builtin_group("F4"), {2, 6, 8, 12}, 32); });
  add("degrees.H4", 8, false, [](Context&) { return check_degrees(builtin_group("H4"), {2, 12, 20, 30}, 30); });

  // 9: lift-built Gamma invariants
  const std::vector<std::pair<std::string, KleinName>> gammas{
      {"G12deg12", KleinName::f}, {"G20", KleinName::H}, {"G30", KleinName::Tau}};
  for (const auto& [g, k] : gammas) {
    bool full = g != "G12deg12";
    add("lift." + g + ".invariance", 9, full,
        [g](Context& c) { return check_invariance(c.lifted(g).raw, builtin_generators("H4")); });
    add("lift." + g + ".phi", 9, full, [g, k](Context& c) {
      std::string n = klein_name_str(k);
      auto lambda = proportionality(phi(c.lifted(g).raw), c.klein_product(k));
      bool ok = lambda && !lambda->is_zero() && lambda->is_rational();
      return verdict(ok, lambda ? "phi = " + lambda->str() + " * " + n + "1*" + n + "2"
                                : "phi-image is not a multiple of " + n + "1*" + n + "2");
    });
    add("lift." + g + ".phi_oriented", 9, full, [g, k](Context& c) {
      std::string n = klein_name_str(k);
      auto lambda = proportionality(phi(c.lifted(g).raw),
                                    oriented_icosahedral_form(k, 1) * oriented_icosahedral_form(k, 2));
      return verdict(lambda && !lambda->is_zero(), "phi = " + opt_str(lambda) + " * " + n + "'1*" + n + "'2");
    });
    add("lift." + g + ".nondivisibility", 9, full,
        [g](Context& c) { return check_nondivisibility(c.lifted(g).raw, quadric_q()); });
    add("lift." + g + ".projection_route", 9, full, [g](Context& c) {
      MPoly other = invariant_by_lift(g, LiftRoute::Projection).raw;
      return verdict(other == c.lifted(g).raw, "factored coset sum and Fischer projection agree");
    });
  }
  for (const auto& f : fnames) {
    add("lift." + f + "L", 0, false, [f](Context& c) {
      const MPoly& l = c.lifted(f + "L").raw;
      KleinName k = tetra_form_for(f);
      auto lambda = proportionality(phi(l), c.klein_product(k));
      auto mu = proportionality(phi(c.geometric(f)), c.klein_product(k));
      if (!lambda || lambda->is_zero() || !mu || mu->is_zero()) return verdict(false, "phi-image not a multiple");
      // l = (lambda/mu) * geometric + q * (invariant)
      FieldElement ratio = *lambda / *mu;
      DivRem dr = divrem(l - c.geometric(f).scaled(ratio), quadric_q());
      return verdict(dr.remainder.is_zero(), "phi = " + lambda->str() + " * " + klein_name_str(k) + "1*" +
                                                 klein_name_str(k) + "2; lift - (" + ratio.str() + ")*" + f +
                                                 " = q * (" + pretty_truncated(dr.quotient, 2) + ")");
    });
  }

  // 10: phi o lift round trip
  add("roundtrip.bidegree2", 10, false, [](Context&) {
    std::size_t count = 0;
    for (unsigned a = 0; a <= 2; ++a) {
      for (unsigned c = 0; c <= 2; ++c) {
        MPoly m = MPoly::monomial(Space::Z, Monomial{{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(2 - a),
                                                      static_cast<std::uint16_t>(c), static_cast<std::uint16_t>(2 - c)}});
        if (!(phi(lift(m)) == m)) return verdict(false, "phi(lift(" + pretty(m) + ")) = " + pretty(phi(lift(m))));
        ++count;
      }
    }
    return verdict(true, std::to_string(count) + " monomials");
  });
  for (unsigned n : {6u, 8u, 12u, 20u, 30u}) {
    add("roundtrip.bidegree" + std::to_string(n), 10, false, [n](Context&) {
      std::mt19937_64 rng(0x5eed0000u + n);
      std::uniform_int_distribution<unsigned> pick(0, n);
      for (int k = 0; k < 50; ++k) {
        unsigned a = pick(rng), c = pick(rng);
        MPoly m = MPoly::monomial(Space::Z, Monomial{{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(n - a),
                                                      static_cast<std::uint16_t>(c), static_cast<std::uint16_t>(n - c)}});
        MPoly back = phi(lift(m));
        if (!(back == m)) return verdict(false, "phi(lift(" + pretty(m) + ")) = " + pretty_truncated(back, 3));
      }
      return verdict(true, "50 random monomials");
    });
  }

  std::sort(defs.begin(), defs.end(), [](const CheckDef& a, const CheckDef& b) { return a.name < b.name; });
  return defs;
}

}  // namespace

std::vector<std::string> suite_check_names(Scope scope) {
  std::vector<std::string> out;
  for (const auto& d : catalogue()) {
    if (scope == Scope::Full || !d.full_only) out.push_back(d.name);
  }
  return out;
}

std::vector<CheckReport> run_suite(const SuiteOptions& options) {
  Context ctx;
  std::vector<CheckReport> out;
  auto start = std::chrono::steady_clock::now();
  for (const auto& d : catalogue()) {
    if (options.scope == Scope::Quick && d.full_only) continue;
    if (d.name.compare(0, options.filter.size(), options.filter) != 0) continue;
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CheckReport r;
    auto t0 = std::chrono::steady_clock::now();
    if (elapsed > options.budget_seconds) {
      r.witness = "not run: runtime budget of " + std::to_string(options.budget_seconds) + " s exhausted";
    } else {
      try {
        r = d.run(ctx);
      } catch (const std::exception& e) {
        r = verdict(false, std::string("error: ") + e.what());
      }
    }
    r.name = d.name;
    r.criterion = d.criterion;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (options.on_report) options.on_report(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string report_text(const std::vector<CheckReport>& reports, bool with_timing) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.pass ? "PASS " : "FAIL ") << r.name << "  " << r.witness;
    if (with_timing) os << "  [" << std::fixed << std::setprecision(2) << r.seconds << "s]";
    os << '\n';
  }
  return os.str();
}

nlohmann::json report_json(const std::vector<CheckReport>& reports, bool with_timing) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j{{"name", r.name}, {"status", r.pass ? "pass" : "fail"}, {"witness", r.witness},
                     {"criterion", r.criterion}};
    if (with_timing) j["seconds"] = r.seconds;
    arr.push_back(std::move(j));
  }
  return arr;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
}

}  // namespace reflinv
