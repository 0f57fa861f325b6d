#pragma once

// Moduli of stable rank-3 vector bundles of degree d, gcd(d, 3) = 1.

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "motivic/errors.hpp"
#include "motivic/motive.hpp"

namespace motivic {

struct BundleSpec {
  int genus;
  int degree;
};

inline void validate(const BundleSpec& s) {
  if (s.genus < 2) throw InvalidArgument("genus must be >= 2, got " + std::to_string(s.genus));
  if (std::gcd(s.degree, 3) != 1)
    throw InvalidDegree("degree " + std::to_string(s.degree) + " is not coprime to 3");
}

/// Index pairs (k1, k2) of the twisted sum: k1 + k2 < 2g-2, or
/// k1 + k2 = 2g-2 with k1 < g-1. Ordered by (k1, k2).
inline std::vector<std::pair<int, int>> bundle_index_set(int genus) {
  std::vector<std::pair<int, int>> out;
  const int n = 2 * genus - 2;
  for (int k1 = 0; k1 <= n; ++k1)
    for (int k2 = 0; k1 + k2 <= n; ++k2)
      if (k1 + k2 < n || k1 < genus - 1) out.emplace_back(k1, k2);
  return out;
}

/// Fixed-determinant moduli N_L(3, d):
///   [C^(g-1) x C^(g-1)] L^{3g-3}
///   + sum_{(k1,k2)} [C^(k1) x C^(k2)] (L^{k1+2k2} + L^{8g-8-2k1-3k2}).
/// The degree only enters through validation.
inline MotiveClass bundle_motive_fixed_det(const BundleSpec& s) {
  validate(s);
  const int g = s.genus;
  std::vector<MotiveClass> sym;
  for (int k = 0; k <= 2 * g - 2; ++k) sym.push_back(sym_curve(k, g));

  MotiveClass out = tate_twist(sym[g - 1] * sym[g - 1], 3 * g - 3);
  for (auto [k1, k2] : bundle_index_set(g)) {
    const IntPoly twists = IntPoly::monomial(k1 + 2 * k2) + IntPoly::monomial(8 * g - 8 - 2 * k1 - 3 * k2);
    out += sym[k1] * sym[k2] * twists;
  }
  return require_effective(out, "bundle_motive_fixed_det");
}

/// N(3, d) = N_L(3, d) x Jac(C).
inline MotiveClass bundle_motive(const BundleSpec& s) {
  return bundle_motive_fixed_det(s) * jacobian(s.genus);
}

}  // namespace motivic
