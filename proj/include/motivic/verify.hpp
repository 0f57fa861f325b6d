#pragma once

// Verification sweeps bundling the cross-checks between independent formula
// routes. Each suite returns counts and the first counterexample.

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "motivic/bundles.hpp"
#include "motivic/higgs.hpp"
#include "motivic/motive.hpp"
#include "motivic/pairs.hpp"

namespace motivic {

struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = describe();
  }

  std::string summary() const {
    std::ostringstream os;
    os << name << ": " << (passed() ? "PASS" : "FAIL") << " (" << checks << " checks, " << failures << " failures)";
    if (!passed()) os << "\n  first counterexample: " << first_failure;
    return os.str();
  }
};

/// h^{p,q} = h^{D-p,D-q} for every (p, q).
inline bool has_poincare_duality(const BiPoly& h, int dim) {
  for (const auto& [k, c] : h.terms())
    if (h.coeff(dim - k.first, dim - k.second) != c) return false;
  return true;
}

/// h^{p,q} = h^{q,p} for every (p, q).
inline bool has_hodge_symmetry(const BiPoly& h) {
  for (const auto& [k, c] : h.terms())
    if (h.coeff(k.second, k.first) != c) return false;
  return true;
}

/// Both sides of the symmetric-power reduction identity, for g <= j <= 2g-2:
///   [C^(j)] = [C^(2g-2-j)] L^{j+1-g} + [Jac] [P^{j-g}].
inline std::pair<MotiveClass, MotiveClass> reduce_symmetric_powers_sides(int genus, int j) {
  MotiveClass lhs = sym_curve(j, genus);
  MotiveClass rhs = tate_twist(sym_curve(2 * genus - 2 - j, genus), j + 1 - genus) +
                    jacobian(genus) * projective_space(j - genus, genus);
  return {std::move(lhs), std::move(rhs)};
}

inline std::string describe(const ChamberSpec& s) {
  std::ostringstream os;
  os << "(g=" << s.genus << ", e=" << s.degree << ", i=" << s.chamber << ")";
  return os.str();
}

/// Every chamber-valid (e, i) with 2 <= e <= 4g-5.
inline std::vector<ChamberSpec> pair_sweep_specs(int genus) {
  std::vector<ChamberSpec> out;
  for (int e = 2; e <= 4 * genus - 5; ++e)
    for (int i = 0; i <= (e - 1) / 2; ++i) out.push_back({genus, e, i});
  return out;
}

inline SuiteResult verify_route_agreement(int max_genus) {
  SuiteResult r{"route-agreement"};
  for (int g = 2; g <= max_genus; ++g) {
    for (const auto& s : pair_sweep_specs(g)) {
      const MotiveClass flip = pair_motive_flip(s);
      if (sym_route_applies(s))
        r.check(pair_motive_sym(s) == flip, [&] { return "flip != sym at " + describe(s); });
      if (geo_route_applies(s))
        r.check(pair_motive_geo(s) == flip, [&] { return "flip != geo at " + describe(s); });
    }
  }
  return r;
}

inline SuiteResult verify_symmetric_power_reduction(int max_genus) {
  SuiteResult r{"symmetric-power-reduction"};
  for (int g = 2; g <= max_genus; ++g)
    for (int j = g; j <= 2 * g - 2; ++j) {
      auto [lhs, rhs] = reduce_symmetric_powers_sides(g, j);
      r.check(lhs == rhs, [&] { return "g=" + std::to_string(g) + " j=" + std::to_string(j); });
    }
  return r;
}

/// Realizing S_b through the exterior-power formula agrees with realizing its
/// Kunnemann normal form, for every b <= 2g.
inline SuiteResult verify_realization_commutes(int max_genus) {
  SuiteResult r{"realization-commutes-with-reduction"};
  for (int g = 1; g <= max_genus; ++g)
    for (int b = 0; b <= 2 * g + 1; ++b) {
      BiPoly direct = b <= 2 * g ? hodge_of_sym(b, g) : BiPoly{};
      r.check(direct == hodge_realize(kunnemann_reduce(b, g)),
              [&] { return "g=" + std::to_string(g) + " b=" + std::to_string(b); });
    }
  return r;
}

/// R-polynomial positivity over every admissible (g, i, e, b), plus the
/// implied bound b >= g+1.
inline SuiteResult verify_r_positivity(int max_genus) {
  SuiteResult r{"r-positivity"};
  for (int g = 2; g <= max_genus; ++g)
    for (int e = 2; e / 2 <= 2 * g - 3; ++e)
      for (int i = 0; i < e / 2; ++i)
        for (int b = 0; b <= i; ++b) {
          if (!r_poly_admissible(g, i, e, b)) continue;
          auto where = [&] {
            std::ostringstream os;
            os << "(g=" << g << ", i=" << i << ", e=" << e << ", b=" << b << ")";
            return os.str();
          };
          r.check(b >= g + 1, [&] { return "b < g+1 at " + where(); });
          bool ok = true;
          try {
            ok = is_nonneg(r_poly(g, i, e, b));
          } catch (const Error&) {
            ok = false;
          }
          r.check(ok, [&] { return "negative R at " + where(); });
        }
  return r;
}

/// q_poly's division is exact for every 0 <= b <= i < e/2, e <= 4g-5.
inline SuiteResult verify_q_divisibility(int max_genus) {
  SuiteResult r{"q-exact-division"};
  for (int g = 2; g <= max_genus; ++g)
    for (int e = 1; e <= 4 * g - 5; ++e)
      for (int i = 0; 2 * i < e; ++i)
        for (int b = 0; b <= i; ++b) {
          bool ok = true;
          try {
            (void)q_poly(g, i, e, b);
          } catch (const NonExactDivision&) {
            ok = false;
          }
          r.check(ok, [&] {
            std::ostringstream os;
            os << "remainder at (g=" << g << ", i=" << i << ", e=" << e << ", b=" << b << ")";
            return os.str();
          });
        }
  return r;
}

inline SuiteResult verify_duality(int max_genus) {
  SuiteResult r{"duality"};
  for (int g = 2; g <= max_genus; ++g) {
    const BundleSpec b{g, 1};
    const BiPoly nl = hodge_realize(bundle_motive_fixed_det(b));
    r.check(has_poincare_duality(nl, 8 * (g - 1)), [&] { return "N_L duality, g=" + std::to_string(g); });
    r.check(has_hodge_symmetry(nl), [&] { return "N_L symmetry, g=" + std::to_string(g); });
    r.check(has_poincare_duality(hodge_realize(bundle_motive(b)), 9 * g - 8),
            [&] { return "N duality, g=" + std::to_string(g); });

    const HiggsSpec hs = HiggsSpec::make(g, 1);
    MotiveClass m(g);
    for (const auto& c : fixed_components(hs)) {
      r.check(has_poincare_duality(hodge_realize(c.motive), c.dimension), [&] {
        return std::string("fixed component ") + to_string(c.kind) + " duality, g=" + std::to_string(g);
      });
      m += tate_twist(c.motive, c.twist);
    }
    r.check(has_hodge_symmetry(hodge_realize(m)), [&] { return "M symmetry, g=" + std::to_string(g); });
  }
  return r;
}

inline SuiteResult verify_degree_independence(int max_genus) {
  SuiteResult r{"degree-independence"};
  for (int g = 2; g <= max_genus; ++g) {
    r.check(higgs_motive(HiggsSpec::make(g, 1)) == higgs_motive(HiggsSpec::make(g, 2)),
            [&] { return "higgs d=1 vs d=2, g=" + std::to_string(g); });
    r.check(bundle_motive(BundleSpec{g, 1}) == bundle_motive(BundleSpec{g, -1}),
            [&] { return "bundles d=1 vs d=-1, g=" + std::to_string(g); });
  }
  return r;
}

inline SuiteResult verify_audit(int max_genus) {
  SuiteResult r{"audit"};
  for (int g = 2; g <= max_genus; ++g)
    for (int d : {1, 2}) {
      const AuditReport report = audit_fixed_loci(HiggsSpec::make(g, d));
      for (const auto& e : report.entries)
        r.check(e.pass, [&] {
          std::ostringstream os;
          os << "g=" << g << " d=" << d << " " << to_string(e.kind) << " dim=" << e.realized_dimension
             << " twist=" << e.twist;
          return os.str();
        });
    }
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "positivity", "duality", "degree-independence", "audit",
                                              "all"};
  return names;
}

/// Runs a named suite. Higgs-level sweeps are capped (duality at g <= 5,
/// degree independence at g <= 4) since the class size grows quickly.
inline std::vector<SuiteResult> run_suite(std::string_view name, int max_genus) {
  std::vector<SuiteResult> out;
  const bool all = name == "all";
  if (all || name == "identities") {
    out.push_back(verify_route_agreement(max_genus));
    out.push_back(verify_symmetric_power_reduction(max_genus));
    out.push_back(verify_realization_commutes(max_genus));
  }
  if (all || name == "positivity") {
    out.push_back(verify_r_positivity(max_genus));
    out.push_back(verify_q_divisibility(max_genus));
  }
  if (all || name == "duality") out.push_back(verify_duality(std::min(max_genus, 5)));
  if (all || name == "degree-independence") out.push_back(verify_degree_independence(std::min(max_genus, 4)));
  if (all || name == "audit") out.push_back(verify_audit(max_genus));
  if (out.empty()) throw InvalidArgument("unknown suite '" + std::string(name) + "'");
  return out;
}

}  // namespace motivic
