#pragma once

// Normal-form classes in the Grothendieck ring generated by the motive of a
// curve C of genus g.
//
// A class is a finite sum  sum_m  S_m * P_m(L)  where m ranges over multisets
// of indices in [1, g], S_m is the formal product of S_b = [Sym^b h^1(C)] for
// b in m, and P_m is a nonzero integer polynomial in the Lefschetz class L.
// Indices outside [1, g] never survive construction: S_0 = 1, S_b = 0 for
// b > 2g, and S_b = S_{2g-b} L^{b-g} for g < b <= 2g.

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "motivic/errors.hpp"
#include "motivic/polyring.hpp"

namespace motivic {

class SymMonomial {
 public:
  SymMonomial() = default;
  /// Indices are sorted on construction. No range check here; MotiveClass
  /// owns normalization.
  explicit SymMonomial(std::vector<int> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
  }
  SymMonomial(std::initializer_list<int> indices) : SymMonomial(std::vector<int>(indices)) {}

  const std::vector<int>& indices() const { return indices_; }
  bool is_unit() const { return indices_.empty(); }
  std::size_t size() const { return indices_.size(); }

  friend SymMonomial operator*(const SymMonomial& a, const SymMonomial& b) {
    SymMonomial r;
    r.indices_.reserve(a.indices_.size() + b.indices_.size());
    std::merge(a.indices_.begin(), a.indices_.end(), b.indices_.begin(), b.indices_.end(),
               std::back_inserter(r.indices_));
    return r;
  }

  friend auto operator<=>(const SymMonomial&, const SymMonomial&) = default;
  friend bool operator==(const SymMonomial&, const SymMonomial&) = default;

 private:
  std::vector<int> indices_;
};

class MotiveClass {
 public:
  using TermMap = std::map<SymMonomial, IntPoly>;

  explicit MotiveClass(int genus) : genus_(genus) {
    if (genus < 1) throw InvalidArgument("genus must be >= 1, got " + std::to_string(genus));
  }

  /// Builds the normal form of  sum raw_mono * poly  where raw_mono may hold
  /// any nonnegative indices; each index is reduced independently.
  static MotiveClass reduce(int genus, const std::vector<std::pair<std::vector<int>, IntPoly>>& raw) {
    MotiveClass out(genus);
    for (const auto& [mono, poly] : raw) out.add_raw_term(mono, poly);
    return out;
  }

  static MotiveClass unit(int genus) { return lefschetz_power(genus, 0); }

  /// L^k
  static MotiveClass lefschetz_power(int genus, int k) {
    MotiveClass out(genus);
    out.add_term(SymMonomial{}, IntPoly::monomial(k));
    return out;
  }

  /// P(L) times the unit monomial.
  static MotiveClass from_lefschetz_poly(int genus, const IntPoly& p) {
    MotiveClass out(genus);
    out.add_term(SymMonomial{}, p);
    return out;
  }

  int genus() const { return genus_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient polynomial of a monomial (zero if absent).
  IntPoly coeff(const SymMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? IntPoly{} : it->second;
  }

  /// True iff every coefficient of every L-polynomial is >= 0.
  bool is_effective() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return is_nonneg(kv.second); });
  }

  MotiveClass& operator+=(const MotiveClass& o) {
    check_genus(o);
    for (const auto& [m, p] : o.terms_) add_term(m, p);
    return *this;
  }
  MotiveClass& operator-=(const MotiveClass& o) {
    check_genus(o);
    for (const auto& [m, p] : o.terms_) add_term(m, -p);
    return *this;
  }

  friend MotiveClass operator+(MotiveClass a, const MotiveClass& b) { return a += b; }
  friend MotiveClass operator-(MotiveClass a, const MotiveClass& b) { return a -= b; }

  friend MotiveClass operator*(const MotiveClass& a, const MotiveClass& b) {
    a.check_genus(b);
    MotiveClass out(a.genus_);
    for (const auto& [ma, pa] : a.terms_)
      for (const auto& [mb, pb] : b.terms_) out.add_term(ma * mb, pa * pb);
    return out;
  }
  MotiveClass& operator*=(const MotiveClass& o) { return *this = *this * o; }

  /// Multiplication by a polynomial in L.
  friend MotiveClass operator*(const MotiveClass& a, const IntPoly& p) {
    MotiveClass out(a.genus_);
    for (const auto& [m, q] : a.terms_) out.add_term(m, q * p);
    return out;
  }

  friend MotiveClass operator*(const MotiveClass& a, const Integer& c) {
    MotiveClass out(a.genus_);
    for (const auto& [m, q] : a.terms_) out.add_term(m, q * c);
    return out;
  }

  friend bool operator==(const MotiveClass&, const MotiveClass&) = default;

 private:
  void check_genus(const MotiveClass& o) const {
    if (o.genus_ != genus_)
      throw GenusMismatch("genus mismatch: " + std::to_string(genus_) + " vs " + std::to_string(o.genus_));
  }

  void add_term(const SymMonomial& m, const IntPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_raw_term(const std::vector<int>& raw, const IntPoly& p) {
    std::vector<int> kept;
    int shift = 0;
    for (int b : raw) {
      if (b < 0) throw InvalidArgument("negative Sym index " + std::to_string(b));
      if (b == 0) continue;
      if (b > 2 * genus_) return;
      if (b > genus_) {
        shift += b - genus_;
        b = 2 * genus_ - b;
        if (b == 0) continue;
      }
      kept.push_back(b);
    }
    add_term(SymMonomial(std::move(kept)), p.shifted(shift));
  }

  int genus_;
  TermMap terms_;
};

inline MotiveClass tate_twist(const MotiveClass& a, int k) {
  if (k < 0) throw InvalidArgument("negative Tate twist");
  return a * IntPoly::monomial(k);
}

/// Normal form of S_b.
inline MotiveClass kunnemann_reduce(int b, int genus) {
  if (b < 0) throw InvalidArgument("kunnemann_reduce: negative index");
  return MotiveClass::reduce(genus, {{{b}, IntPoly{1}}});
}

/// Class of the symmetric power C^(j): sum over a+b+c=j of S_b L^c.
inline MotiveClass sym_curve(int j, int genus) {
  if (j < 0) throw InvalidArgument("sym_curve: negative power");
  std::vector<std::pair<std::vector<int>, IntPoly>> raw;
  for (int b = 0; b <= j; ++b) raw.push_back({{b}, IntPoly::geometric_sum(0, j - b)});
  return MotiveClass::reduce(genus, raw);
}

/// Class of Jac(C): sum_{b=0}^{2g} S_b.
inline MotiveClass jacobian(int genus) {
  std::vector<std::pair<std::vector<int>, IntPoly>> raw;
  for (int b = 0; b <= 2 * genus; ++b) raw.push_back({{b}, IntPoly{1}});
  return MotiveClass::reduce(genus, raw);
}

/// Class of P^n: 1 + L + ... + L^n. Zero for n = -1 (empty space).
inline MotiveClass projective_space(int n, int genus) {
  if (n < -1) throw InvalidArgument("projective_space: dimension below -1");
  return MotiveClass::from_lefschetz_poly(genus, IntPoly::geometric_sum(0, n));
}

/// Hodge polynomial of Sym^b h^1(C): its cohomology is the b-th exterior
/// power of H^1(C), so h^{p,b-p} = C(g,p) C(g,b-p). Valid for any b >= 0.
inline BiPoly hodge_of_sym(int b, int genus) {
  BiPoly out;
  for (int p = 0; p <= b; ++p) out.add_term(p, b - p, binomial(genus, p) * binomial(genus, b - p));
  return out;
}

/// Hodge realization: L -> uv, S_b -> hodge_of_sym(b). Coefficient of
/// u^p v^q is h^{p,q}.
inline BiPoly hodge_realize(const MotiveClass& m) {
  const int g = m.genus();
  std::vector<BiPoly> sym(static_cast<std::size_t>(g) + 1);
  for (int b = 0; b <= g; ++b) sym[static_cast<std::size_t>(b)] = hodge_of_sym(b, g);

  BiPoly out;
  for (const auto& [mono, poly] : m.terms()) {
    BiPoly part = BiPoly::monomial(0, 0);
    for (int b : mono.indices()) part *= sym[static_cast<std::size_t>(b)];
    BiPoly lpoly;
    for (int k = 0; k <= poly.degree(); ++k) lpoly.add_term(k, k, poly.coeff(k));
    out += part * lpoly;
  }
  return out;
}

/// Poincare polynomial in t: L -> t^2, S_b -> C(2g, b) t^b.
inline IntPoly poincare(const MotiveClass& m) {
  const int g = m.genus();
  IntPoly out;
  for (const auto& [mono, poly] : m.terms()) {
    Integer c = 1;
    int deg = 0;
    for (int b : mono.indices()) {
      c *= binomial(2 * g, b);
      deg += b;
    }
    std::vector<Integer> v(static_cast<std::size_t>(2 * std::max(poly.degree(), 0) + 1));
    for (int k = 0; k <= poly.degree(); ++k) v[static_cast<std::size_t>(2 * k)] = poly.coeff(k);
    out += IntPoly(std::move(v)).shifted(deg) * c;
  }
  return out;
}

/// Throws NotEffective naming `what` if the class has a negative coefficient.
inline const MotiveClass& require_effective(const MotiveClass& m, const std::string& what) {
  if (!m.is_effective()) throw NotEffective(what + ": class has a negative coefficient");
  return m;
}

}  // namespace motivic
