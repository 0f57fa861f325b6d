#pragma once

// Rank-3 Higgs moduli M(3, d) via the Bialynicki-Birula decomposition for
// the scaling action on the Higgs field. The class of M is the sum over fixed
// components F of [F] L^{codim F+}, with codim F+ = 9(g-1)+1 - dim F.
//
// Fixed components come in four kinds:
//   Type3   - the bundle moduli N(3, d) itself (Higgs field zero)
//   Type111 - Pic x C^(m1) x C^(m2)
//   Type12  - Pic x P^{i_k}_{e(k)}, pairs of degree e(k) = 4g-3k-7+x
//   Type21  - Pic x P^{i(k)}_{f(k)}, pairs of degree f(k) = 4g-4-3k-x
// where x in {1, 2} is the residue of d mod 3.

#include <sstream>
#include <string>
#include <vector>

#include "motivic/bundles.hpp"
#include "motivic/errors.hpp"
#include "motivic/motive.hpp"
#include "motivic/pairs.hpp"

namespace motivic {

struct HiggsSpec {
  int genus;
  int degree;
  int residue;  // x: d mod 3, in {1, 2}

  static HiggsSpec make(int genus, int degree) {
    validate(BundleSpec{genus, degree});
    return HiggsSpec{genus, degree, ((degree % 3) + 3) % 3};
  }
};

enum class ComponentKind { Type3, Type111, Type12, Type21 };

inline const char* to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::Type3: return "(3)";
    case ComponentKind::Type111: return "(1,1,1)";
    case ComponentKind::Type12: return "(1,2)";
    case ComponentKind::Type21: return "(2,1)";
  }
  return "?";
}

struct FixedComponent {
  ComponentKind kind;
  std::vector<int> params;  // (m1, m2) for Type111, (k) for Type12/Type21
  int dimension;
  int twist;
  MotiveClass cofactor;  // motive / Jac(C)
  MotiveClass motive;

  /// For pair components: the pair degree and chamber actually used.
  int pair_degree = 0;
  int pair_chamber = 0;
};

inline int higgs_half_dimension(int genus) { return 9 * (genus - 1) + 1; }

inline FixedComponent fixed_locus_3(const HiggsSpec& s) {
  const BundleSpec b{s.genus, s.degree};
  MotiveClass fixed_det = bundle_motive_fixed_det(b);
  MotiveClass full = fixed_det * jacobian(s.genus);
  return {ComponentKind::Type3, {}, higgs_half_dimension(s.genus), 0, std::move(fixed_det), std::move(full)};
}

inline std::vector<FixedComponent> fixed_locus_111(const HiggsSpec& s) {
  const int g = s.genus;
  const int bound = 6 * g - 6;
  const MotiveClass jac = jacobian(g);
  std::vector<FixedComponent> out;
  for (int m1 = 0; 2 * m1 < bound; ++m1) {
    for (int m2 = 0; 2 * m1 + m2 < bound && m1 + 2 * m2 < bound; ++m2) {
      if (((m2 - m1 - s.degree) % 3 + 3) % 3 != 0) continue;
      MotiveClass cof = sym_curve(m1, g) * sym_curve(m2, g);
      MotiveClass mot = jac * cof;
      out.push_back({ComponentKind::Type111, {m1, m2}, g + m1 + m2, 8 * g - 8 - m1 - m2, std::move(cof),
                     std::move(mot)});
    }
  }
  return out;
}

namespace detail {

inline FixedComponent pair_component(ComponentKind kind, int genus, int k, int e, int i, int twist,
                                     const Rational& sigma) {
  const int found = chamber_of(sigma, e);
  if (found != i) {
    std::ostringstream os;
    os << "chamber mismatch for " << to_string(kind) << " k=" << k << ": closed form gives i=" << i
       << ", stability parameter " << sigma << " lies in chamber " << found << " (e=" << e << ")";
    throw ChamberMismatch(os.str());
  }
  const ChamberSpec spec{genus, e, i};
  const MotiveClass jac = jacobian(genus);
  MotiveClass cof = require_effective(jac * pair_cofactor_flip(spec), "pair component");
  MotiveClass mot = jac * cof;
  FixedComponent c{kind, {k}, genus + pair_dimension(spec), twist, std::move(cof), std::move(mot)};
  c.pair_degree = e;
  c.pair_chamber = i;
  return c;
}

}  // namespace detail

/// Type (1,2): for k = 0..g-2, e = 4g-3k-7+x, i_k = 2g-2k-5+x,
/// stability (k+1)/2 - x/6, twist 2g+3k+1-x.
inline std::vector<FixedComponent> fixed_locus_12(const HiggsSpec& s) {
  const int g = s.genus, x = s.residue;
  std::vector<FixedComponent> out;
  for (int k = 0; k <= g - 2; ++k) {
    const Rational sigma = Rational(k + 1, 2) - Rational(x, 6);
    out.push_back(detail::pair_component(ComponentKind::Type12, g, k, 4 * g - 3 * k - 7 + x, 2 * g - 2 * k - 5 + x,
                                         2 * g + 3 * k + 1 - x, sigma));
  }
  return out;
}

/// Type (2,1): for k = 0..g-2, e = 4g-4-3k-x, i(k) = 2g-2k-2-x,
/// stability k/2 + x/6, twist 2g+3k-2+x.
inline std::vector<FixedComponent> fixed_locus_21(const HiggsSpec& s) {
  const int g = s.genus, x = s.residue;
  std::vector<FixedComponent> out;
  for (int k = 0; k <= g - 2; ++k) {
    const Rational sigma = Rational(k, 2) + Rational(x, 6);
    out.push_back(detail::pair_component(ComponentKind::Type21, g, k, 4 * g - 4 - 3 * k - x, 2 * g - 2 * k - 2 - x,
                                         2 * g + 3 * k - 2 + x, sigma));
  }
  return out;
}

/// All fixed components in output order: Type3, Type111 by (m1, m2),
/// Type12 by k, Type21 by k.
inline std::vector<FixedComponent> fixed_components(const HiggsSpec& s) {
  std::vector<FixedComponent> out;
  out.push_back(fixed_locus_3(s));
  for (auto* part : {&fixed_locus_111, &fixed_locus_12, &fixed_locus_21})
    for (auto& c : (*part)(s)) out.push_back(std::move(c));
  return out;
}

inline MotiveClass higgs_motive(const HiggsSpec& s) {
  MotiveClass out(s.genus);
  for (const auto& c : fixed_components(s)) out += tate_twist(c.motive, c.twist);
  return require_effective(out, "higgs_motive");
}

/// The cofactor Q with Jac(C) * Q = [M(3, d)]; checked by re-multiplication.
inline MotiveClass higgs_motive_mod_jac(const HiggsSpec& s) {
  MotiveClass quot(s.genus), full(s.genus);
  for (const auto& c : fixed_components(s)) {
    quot += tate_twist(c.cofactor, c.twist);
    full += tate_twist(c.motive, c.twist);
  }
  if (jacobian(s.genus) * quot != full) throw Error("higgs_motive_mod_jac: Jac * quotient != class of M");
  return require_effective(quot, "higgs_motive_mod_jac");
}

struct AuditEntry {
  ComponentKind kind;
  std::vector<int> params;
  int declared_dimension;
  int realized_dimension;  // half the top degree of the Poincare polynomial
  int twist;
  bool pass;
};

struct AuditReport {
  HiggsSpec spec;
  std::vector<AuditEntry> entries;

  bool all_passed() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }

  /// One line per component: kind, params, dimension, twist, pass/fail.
  std::string format() const {
    std::ostringstream os;
    for (const auto& e : entries) {
      os << to_string(e.kind) << " params=[";
      for (std::size_t j = 0; j < e.params.size(); ++j) os << (j ? "," : "") << e.params[j];
      os << "] dim=" << e.realized_dimension;
      if (e.realized_dimension != e.declared_dimension) os << " (declared " << e.declared_dimension << ")";
      os << " twist=" << e.twist << " " << (e.pass ? "pass" : "FAIL") << "\n";
    }
    return os.str();
  }
};

/// Recomputes each component's dimension from its motive and checks the
/// Lagrangian identity twist = 9(g-1)+1 - dim.
inline AuditReport audit_fixed_loci(const HiggsSpec& s) {
  AuditReport report{s, {}};
  const int half = higgs_half_dimension(s.genus);
  for (const auto& c : fixed_components(s)) {
    const int top = poincare(c.motive).degree();
    const int realized = top / 2;
    const bool pass = top % 2 == 0 && realized == c.dimension && c.twist == half - realized;
    report.entries.push_back({c.kind, c.params, c.dimension, realized, c.twist, pass});
  }
  return report;
}

}  // namespace motivic
