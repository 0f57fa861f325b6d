#pragma once

// Moduli spaces P^i_e of rank-2 degree-e pairs (V, phi) with stability
// parameter in the chamber C_i = (sigma_{i+1}, sigma_i), sigma_i = e/2 - i.
//
// Three routes to the class of P^i_e:
//   flip - sum over the wall-crossings from the extremal chamber; no
//          division, no hypothesis beyond chamber validity. Trusted oracle.
//   sym  - closed form in the S_b basis with Q/R polynomials.
//   geo  - closed form in symmetric powers of C, Jac(C) and projective spaces.

#include <cstdlib>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "motivic/errors.hpp"
#include "motivic/motive.hpp"
#include "motivic/polyring.hpp"

namespace motivic {

using Rational = boost::rational<long long>;

struct ChamberSpec {
  int genus;
  int degree;   // e
  int chamber;  // i
};

struct ChamberLayout {
  int last_chamber;             // m = floor((e-1)/2)
  std::vector<Rational> walls;  // sigma_0 > ... > sigma_m
};

inline ChamberLayout chambers(int e) {
  if (e < 2) throw InvalidArgument("chambers: pair degree must be >= 2, got " + std::to_string(e));
  ChamberLayout out{(e - 1) / 2, {}};
  for (int i = 0; i <= out.last_chamber; ++i) out.walls.push_back(Rational(e, 2) - i);
  return out;
}

/// Index i of the chamber containing sigma.
inline int chamber_of(const Rational& sigma, int e) {
  if (e < 2) throw InvalidArgument("chamber_of: pair degree must be >= 2");
  const Rational half(e, 2);
  if (sigma <= 0 || sigma > half)
    throw OutOfRange("stability parameter outside (0, e/2]");
  const Rational offset = half - sigma;  // in [0, e/2)
  if (offset.denominator() == 1) throw OnWall("stability parameter lies on a wall");
  return static_cast<int>(offset.numerator() / offset.denominator());
}

/// Parses "a/b" or "a" into an exact rational.
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    const long long num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash)) throw InvalidArgument("bad rational");
    if (slash == std::string::npos) return Rational(num);
    const std::string tail = text.substr(slash + 1);
    const long long den = std::stoll(tail, &used);
    if (used != tail.size() || den == 0) throw InvalidArgument("bad rational");
    return Rational(num, den);
  } catch (const std::logic_error&) {
    throw InvalidArgument("not an exact rational a/b: '" + text + "'");
  } catch (const InvalidArgument&) {
    throw InvalidArgument("not an exact rational a/b: '" + text + "'");
  }
}

inline void validate(const ChamberSpec& s) {
  if (s.genus < 1) throw InvalidChamber("genus must be >= 1");
  if (s.degree < 2) throw InvalidChamber("pair degree e must be >= 2, got " + std::to_string(s.degree));
  const int m = (s.degree - 1) / 2;
  if (s.chamber < 0 || s.chamber > m)
    throw InvalidChamber("chamber " + std::to_string(s.chamber) + " outside [0, " + std::to_string(m) +
                         "] for e=" + std::to_string(s.degree));
}

inline int pair_dimension(const ChamberSpec& s) {
  validate(s);
  return s.degree + 2 * s.genus - 2;
}

/// Class of P^i_e divided by Jac(C):
///   sum_{j=0}^{i} [C^(j)] (L^{e+g-2j-1} - L^j) / (L - 1).
/// The geometric factor is a signed sum; it is negative for some j once
/// 3i > e+g-1, and those terms cancel against Kunnemann-reduced ones.
inline MotiveClass pair_cofactor_flip(const ChamberSpec& s) {
  validate(s);
  const int g = s.genus, e = s.degree;
  MotiveClass out(g);
  for (int j = 0; j <= s.chamber; ++j)
    out += sym_curve(j, g) * IntPoly::geometric_quotient(j, e + g - 2 * j - 1);
  return out;
}

inline MotiveClass pair_motive_flip(const ChamberSpec& s) {
  MotiveClass out = jacobian(s.genus) * pair_cofactor_flip(s);
  return require_effective(out, "pair_motive_flip");
}

/// Q_{i,e,b}(T) = (T^b - T^{e+g-1-2i})(1 - T^{i-b+1})(1 - T^{i-b+2})
///               / ((1-T)^2 (1-T^2)),
/// computed by exact division.
inline IntPoly q_poly(int g, int i, int e, int b) {
  if (b < 0 || b > i)
    throw HypothesisViolation("q_poly requires 0 <= b <= i (b=" + std::to_string(b) + ", i=" + std::to_string(i) + ")");
  if (2 * i >= e)
    throw HypothesisViolation("q_poly requires i < e/2 (i=" + std::to_string(i) + ", e=" + std::to_string(e) + ")");
  const int top = e + g - 1 - 2 * i;
  const IntPoly one{1};
  const IntPoly num = (IntPoly::monomial(b) - IntPoly::monomial(top)) * (one - IntPoly::monomial(i - b + 1)) *
                      (one - IntPoly::monomial(i - b + 2));
  const IntPoly one_minus_t{1, -1};
  const IntPoly den = one_minus_t * one_minus_t * IntPoly{1, 0, -1};
  return exact_div(num, den);
}

/// True iff e+g-1-2i < b <= i < floor(e/2) <= 2g-3. The string names the
/// first violated inequality when false.
inline bool r_poly_admissible(int g, int i, int e, int b, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!(e + g - 1 - 2 * i < b)) return fail("e+g-1-2i < b");
  if (!(b <= i)) return fail("b <= i");
  if (!(i < e / 2)) return fail("i < floor(e/2)");
  if (!(e / 2 <= 2 * g - 3)) return fail("floor(e/2) <= 2g-3");
  return true;
}

/// R_{i,e,b}(T) = T^{b-g} Q_{i,e,b}(T) + Q_{i,e,2g-b}(T); asserted nonnegative.
inline IntPoly r_poly(int g, int i, int e, int b) {
  std::string why;
  if (!r_poly_admissible(g, i, e, b, &why))
    throw HypothesisViolation("r_poly requires " + why + " (g=" + std::to_string(g) + ", i=" + std::to_string(i) +
                              ", e=" + std::to_string(e) + ", b=" + std::to_string(b) + ")");
  IntPoly r = q_poly(g, i, e, b).shifted(b - g) + q_poly(g, i, e, 2 * g - b);
  if (!is_nonneg(r)) throw NotEffective("r_poly: negative coefficient in R_{i,e,b}");
  return r;
}

/// Hypothesis of the S_b-basis formula: i < floor(e/2) <= 2g-3.
inline bool sym_route_applies(const ChamberSpec& s, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  validate(s);
  if (!(s.chamber < s.degree / 2)) return fail("i < floor(e/2)");
  if (!(s.degree / 2 <= 2 * s.genus - 3)) return fail("floor(e/2) <= 2g-3");
  return true;
}

/// Hypothesis of the geometric formula: 2i < e <= 4g-5.
inline bool geo_route_applies(const ChamberSpec& s, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  validate(s);
  if (!(2 * s.chamber < s.degree)) return fail("2i < e");
  if (!(s.degree <= 4 * s.genus - 5)) return fail("e <= 4g-5");
  return true;
}

inline MotiveClass pair_motive_sym(const ChamberSpec& s) {
  std::string why;
  if (!sym_route_applies(s, &why)) throw HypothesisViolation("pair_motive_sym requires " + why);
  const int g = s.genus, e = s.degree, i = s.chamber;
  MotiveClass inner(g);
  if (3 * i <= e + g - 1) {
    for (int b = 0; b <= i; ++b) inner += kunnemann_reduce(b, g) * q_poly(g, i, e, b);
  } else {
    // The negative Q-terms b in [g+e-2i, i] are absorbed into R-terms at
    // the mirrored indices 2g-b in [2g-i, g-e+2i].
    const int r_lo = 2 * g - i, r_hi = g - e + 2 * i;
    for (int b = 0; b <= i; ++b) {
      if (b >= r_lo && b <= r_hi) {
        inner += kunnemann_reduce(b, g) * r_poly(g, i, e, 2 * g - b);
      } else if (b < r_lo || std::abs(b - g) < e - 2 * i) {
        inner += kunnemann_reduce(b, g) * q_poly(g, i, e, b);
      }
    }
  }
  return require_effective(jacobian(g) * inner, "pair_motive_sym");
}

inline MotiveClass pair_motive_geo(const ChamberSpec& s) {
  std::string why;
  if (!geo_route_applies(s, &why)) throw HypothesisViolation("pair_motive_geo requires " + why);
  const int g = s.genus, e = s.degree, i = s.chamber;
  const MotiveClass jac = jacobian(g);
  auto block = [&](int k, int proj_dim) {
    return sym_curve(k, g) * projective_space(proj_dim, g);
  };

  MotiveClass inner(g);
  if (3 * i < e + g) {
    for (int k = 0; k <= i; ++k) inner += tate_twist(block(k, e + g - 3 * k - 2), k);
    return require_effective(jac * inner, "pair_motive_geo");
  }

  inner += tate_twist(block(g - 1, e - 2 * g + 1), g - 1);
  for (int k = 0; k <= 2 * g - 3 - i; ++k) inner += tate_twist(block(k, e + g - 3 * k - 2), k);
  for (int k = 2 * g - 2 - i; k <= g - 2; ++k)
    inner += block(k, e - 2 * g + 1) * (IntPoly::monomial(3 * g - 3 - 2 * k) + IntPoly::monomial(k));
  MotiveClass out = jac * inner + jac * jac * q_poly(g, i, e, g);
  return require_effective(out, "pair_motive_geo");
}

}  // namespace motivic
