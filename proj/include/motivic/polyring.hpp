#pragma once

// Exact polynomial arithmetic over arbitrary-precision integers.
//
// DensePoly<C> is a univariate polynomial stored as a coefficient vector
// indexed by exponent, always trimmed so the top coefficient is nonzero.
// SparseBiPoly<C> is a bivariate polynomial stored as an ordered map from
// (p, q) exponents to nonzero coefficients.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "motivic/errors.hpp"

namespace motivic {

using Integer = boost::multiprecision::cpp_int;

template <class Coeff>
class DensePoly {
 public:
  using coeff_type = Coeff;

  DensePoly() = default;
  DensePoly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }
  explicit DensePoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static DensePoly constant(Coeff c) { return DensePoly(std::vector<Coeff>{std::move(c)}); }

  /// c * T^exp
  static DensePoly monomial(int exp, Coeff c = Coeff(1)) {
    if (exp < 0) throw InvalidArgument("negative exponent in DensePoly::monomial");
    std::vector<Coeff> v(static_cast<std::size_t>(exp) + 1);
    v.back() = std::move(c);
    return DensePoly(std::move(v));
  }

  /// T^lo + T^(lo+1) + ... + T^hi; zero when hi < lo.
  static DensePoly geometric_sum(int lo, int hi) {
    if (hi < lo) return {};
    if (lo < 0) throw InvalidArgument("negative exponent in DensePoly::geometric_sum");
    std::vector<Coeff> v(static_cast<std::size_t>(hi) + 1);
    for (int k = lo; k <= hi; ++k) v[static_cast<std::size_t>(k)] = Coeff(1);
    return DensePoly(std::move(v));
  }

  /// (T^a - T^b) / (1 - T), expanded as a signed geometric sum.
  static DensePoly geometric_quotient(int a, int b) {
    if (a <= b) return geometric_sum(a, b - 1);
    return -geometric_sum(b, a - 1);
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Lowest exponent with a nonzero coefficient; -1 for zero.
  int valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (coeffs_[k] != 0) return static_cast<int>(k);
    return -1;
  }

  std::span<const Coeff> coeffs() const { return coeffs_; }

  Coeff coeff(int k) const {
    if (k < 0 || k > degree()) return Coeff(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }

  const Coeff& leading() const { return coeffs_.back(); }

  template <class X>
  X eval(const X& x) const {
    X acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  DensePoly& operator+=(const DensePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }

  DensePoly& operator-=(const DensePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }

  DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

  DensePoly& operator*=(const Coeff& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(DensePoly a, const Coeff& c) { return a *= c; }
  friend DensePoly operator*(const Coeff& c, DensePoly a) { return a *= c; }

  friend DensePoly operator-(DensePoly a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }

  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return DensePoly(std::move(out));
  }

  /// Multiply by T^k.
  DensePoly shifted(int k) const {
    if (k < 0) throw InvalidArgument("negative shift in DensePoly::shifted");
    if (is_zero()) return {};
    std::vector<Coeff> v(static_cast<std::size_t>(k));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return DensePoly(std::move(v));
  }

  DensePoly pow(unsigned n) const {
    DensePoly result = constant(Coeff(1));
    DensePoly base = *this;
    while (n) {
      if (n & 1u) result *= base;
      n >>= 1u;
      if (n) base *= base;
    }
    return result;
  }

  friend bool operator==(const DensePoly&, const DensePoly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

/// Quotient of an exact division. Synthetic long division; throws
/// NonExactDivision if a coefficient step is not integral or the final
/// remainder is nonzero.
template <class Coeff>
DensePoly<Coeff> exact_div(const DensePoly<Coeff>& num, const DensePoly<Coeff>& den) {
  if (den.is_zero()) throw DivisionByZero("exact_div: zero denominator");
  if (num.is_zero()) return {};
  const int dn = den.degree();
  const int nn = num.degree();
  if (nn < dn) throw NonExactDivision("exact_div: numerator degree below denominator degree");

  std::vector<Coeff> rem(num.coeffs().begin(), num.coeffs().end());
  std::vector<Coeff> quot(static_cast<std::size_t>(nn - dn) + 1);
  const Coeff& lead = den.leading();
  const auto dc = den.coeffs();
  for (int k = nn - dn; k >= 0; --k) {
    const Coeff& top = rem[static_cast<std::size_t>(k + dn)];
    if (top == 0) continue;
    if (top % lead != 0) throw NonExactDivision("exact_div: non-integral quotient coefficient");
    Coeff q = top / lead;
    for (int j = 0; j <= dn; ++j) rem[static_cast<std::size_t>(k + j)] -= q * dc[static_cast<std::size_t>(j)];
    quot[static_cast<std::size_t>(k)] = std::move(q);
  }
  for (const auto& r : rem)
    if (r != 0) throw NonExactDivision("exact_div: nonzero remainder");
  return DensePoly<Coeff>(std::move(quot));
}

template <class Coeff>
bool is_nonneg(const DensePoly<Coeff>& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Coeff& c) { return c >= 0; });
}

/// Human-readable form, ascending powers: "1 + 2*T - T^3".
template <class Coeff>
std::string to_string(const DensePoly<Coeff>& p, std::string_view var = "T") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    Coeff c = p.coeff(k);
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

template <class Coeff>
class SparseBiPoly {
 public:
  using coeff_type = Coeff;
  using key_type = std::pair<int, int>;
  using map_type = std::map<key_type, Coeff>;

  SparseBiPoly() = default;

  static SparseBiPoly monomial(int p, int q, Coeff c = Coeff(1)) {
    SparseBiPoly r;
    r.add_term(p, q, std::move(c));
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  const map_type& terms() const { return terms_; }

  Coeff coeff(int p, int q) const {
    auto it = terms_.find({p, q});
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// Largest p (resp. q) with a nonzero term; -1 for zero.
  int max_p() const {
    int m = -1;
    for (const auto& [k, c] : terms_) m = std::max(m, k.first);
    return m;
  }
  int max_q() const {
    int m = -1;
    for (const auto& [k, c] : terms_) m = std::max(m, k.second);
    return m;
  }

  void add_term(int p, int q, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({p, q}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparseBiPoly& operator+=(const SparseBiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  SparseBiPoly& operator-=(const SparseBiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
  }
  SparseBiPoly& operator*=(const Coeff& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, x] : terms_) x *= c;
    return *this;
  }

  friend SparseBiPoly operator+(SparseBiPoly a, const SparseBiPoly& b) { return a += b; }
  friend SparseBiPoly operator-(SparseBiPoly a, const SparseBiPoly& b) { return a -= b; }
  friend SparseBiPoly operator*(SparseBiPoly a, const Coeff& c) { return a *= c; }

  friend SparseBiPoly operator*(const SparseBiPoly& a, const SparseBiPoly& b) {
    SparseBiPoly out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
  }
  SparseBiPoly& operator*=(const SparseBiPoly& o) { return *this = *this * o; }

  SparseBiPoly pow(unsigned n) const {
    SparseBiPoly result = monomial(0, 0);
    for (unsigned k = 0; k < n; ++k) result *= *this;
    return result;
  }

  /// Specialization u, v -> t.
  DensePoly<Coeff> total_degree_poly() const {
    std::vector<Coeff> v;
    for (const auto& [k, c] : terms_) {
      auto d = static_cast<std::size_t>(k.first + k.second);
      if (v.size() <= d) v.resize(d + 1);
      v[d] += c;
    }
    return DensePoly<Coeff>(std::move(v));
  }

  friend bool operator==(const SparseBiPoly&, const SparseBiPoly&) = default;

 private:
  map_type terms_;
};

using IntPoly = DensePoly<Integer>;
using BiPoly = SparseBiPoly<Integer>;

inline Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace motivic
