#pragma once

// Polynomials over the two-element field: MultiPoly in X1, X2, X3 and SymPoly
// in the elementary symmetric E1, E2, E3 (weights 2, 4, 6).

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kmfoam/error.hpp"

namespace kmfoam {

using Exp3 = std::array<int, 3>;

namespace detail {

// Monomials ordered so that the lex-leading one (X1 > X2 > X3) comes first.
struct LexDesc {
  bool operator()(const Exp3& a, const Exp3& b) const { return a > b; }
};

using MonoSet = std::set<Exp3, LexDesc>;

inline void toggle(MonoSet& s, const Exp3& m) {
  auto [it, fresh] = s.insert(m);
  if (!fresh) s.erase(it);
}

inline std::string mono_text(const Exp3& e, const char* names[3]) {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string poly_text(const MonoSet& terms, const char* names[3]) {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& t : terms) s += (s.empty() ? "" : " + ") + mono_text(t, names);
  return s;
}

}  // namespace detail

class MultiPoly {
 public:
  MultiPoly() = default;
  static MultiPoly one() { return monomial({0, 0, 0}); }
  static MultiPoly monomial(const Exp3& e) {
    MultiPoly p;
    p.terms_.insert(e);
    return p;
  }
  /// X_i + X_j (0-based indices).
  static MultiPoly pair_sum(int i, int j) {
    Exp3 a{0, 0, 0}, b{0, 0, 0};
    a[i] = 1;
    b[j] = 1;
    MultiPoly p;
    p.terms_ = {a, b};
    return p;
  }

  bool zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const detail::MonoSet& terms() const { return terms_; }
  const Exp3& leading() const { return *terms_.begin(); }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& t : o.terms_) detail::toggle(terms_, t);
    return *this;
  }
  void add_term(const Exp3& e) { detail::toggle(terms_, e); }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) r.add_term({s[0] + t[0], s[1] + t[1], s[2] + t[2]});
    return r;
  }
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly pow(int n) const {
    MultiPoly r = one(), base = *this;
    for (; n > 0; n >>= 1) {
      if (n & 1) r = r * base;
      if (n > 1) base = base * base;
    }
    return r;
  }

  /// Image under a permutation of the variables: X_k -> X_{perm[k]}.
  MultiPoly permuted(const std::array<int, 3>& perm) const {
    MultiPoly r;
    for (const auto& t : terms_) {
      Exp3 u{};
      for (int k = 0; k < 3; ++k) u[perm[k]] = t[k];
      r.add_term(u);
    }
    return r;
  }

  bool symmetric() const {
    return permuted({1, 0, 2}) == *this && permuted({1, 2, 0}) == *this;
  }

  /// Exact quotient by X_i + X_j; throws when the division leaves a remainder.
  MultiPoly divide_pair_sum(int i, int j) const {
    int hi = std::min(i, j), lo = std::max(i, j);
    MultiPoly rem = *this, q;
    while (!rem.zero()) {
      Exp3 t = rem.leading();
      if (t[hi] == 0) throw InvariantError("inexact division by X" + std::to_string(hi + 1) + "+X" + std::to_string(lo + 1));
      --t[hi];
      q.add_term(t);
      Exp3 a = t, b = t;
      ++a[hi];
      ++b[lo];
      rem.add_term(a);
      rem.add_term(b);
    }
    return q;
  }

  std::string str() const {
    static const char* names[3] = {"X1", "X2", "X3"};
    return detail::poly_text(terms_, names);
  }

 private:
  detail::MonoSet terms_;
};

class SymPoly {
 public:
  SymPoly() = default;
  static SymPoly monomial(const Exp3& e) {
    SymPoly p;
    p.terms_.insert(e);
    return p;
  }

  static int weight(const Exp3& e) { return 2 * e[0] + 4 * e[1] + 6 * e[2]; }

  bool zero() const { return terms_.empty(); }
  const detail::MonoSet& terms() const { return terms_; }
  void add_term(const Exp3& e) { detail::toggle(terms_, e); }
  bool contains(const Exp3& e) const { return terms_.count(e) != 0; }
  friend bool operator==(const SymPoly&, const SymPoly&) = default;

  bool homogeneous() const {
    for (const auto& t : terms_)
      if (weight(t) != weight(*terms_.begin())) return false;
    return true;
  }
  /// Weighted degree of a nonzero homogeneous polynomial.
  int degree() const {
    if (zero()) throw InvariantError("degree of the zero polynomial");
    if (!homogeneous()) throw InvariantError("polynomial is not homogeneous: " + str());
    return weight(*terms_.begin());
  }

  /// Expansion in X1, X2, X3.
  MultiPoly expand() const;

  std::string str() const {
    static const char* names[3] = {"E1", "E2", "E3"};
    return detail::poly_text(terms_, names);
  }

 private:
  detail::MonoSet terms_;
};

namespace detail {

// Powers of E1, E2, E3 as polynomials in X, memoised per thread.
inline const MultiPoly& elementary_power(int which, int n) {
  thread_local std::map<std::pair<int, int>, MultiPoly> memo;
  auto key = std::make_pair(which, n);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  MultiPoly base;
  if (which == 0) {
    base.add_term({1, 0, 0});
    base.add_term({0, 1, 0});
    base.add_term({0, 0, 1});
  } else if (which == 1) {
    base.add_term({1, 1, 0});
    base.add_term({1, 0, 1});
    base.add_term({0, 1, 1});
  } else {
    base.add_term({1, 1, 1});
  }
  MultiPoly p = n == 0 ? MultiPoly::one() : elementary_power(which, n - 1) * base;
  return memo.emplace(key, std::move(p)).first->second;
}

inline MultiPoly elementary_monomial(const Exp3& e) {
  return elementary_power(0, e[0]) * elementary_power(1, e[1]) * elementary_power(2, e[2]);
}

}  // namespace detail

inline MultiPoly SymPoly::expand() const {
  MultiPoly r;
  for (const auto& t : terms_) r += detail::elementary_monomial(t);
  return r;
}

/// Rewrites a symmetric polynomial in E1, E2, E3 by repeatedly cancelling the
/// lex-leading term X1^a X2^b X3^c with E1^(a-b) E2^(b-c) E3^c.
inline SymPoly to_elementary(const MultiPoly& p) {
  if (!p.symmetric()) throw InvariantError("polynomial is not symmetric: " + p.str());
  SymPoly out;
  MultiPoly rem = p;
  while (!rem.zero()) {
    Exp3 t = rem.leading();
    if (!(t[0] >= t[1] && t[1] >= t[2])) throw InvariantError("polynomial is not symmetric: " + p.str());
    Exp3 e{t[0] - t[1], t[1] - t[2], t[2]};
    out.add_term(e);
    rem += detail::elementary_monomial(e);
  }
  return out;
}

/// Zero or E^r in F2[E].
struct EMonomial {
  bool nonzero = false;
  int r = 0;

  static EMonomial zero() { return {}; }
  static EMonomial power(int r) { return {true, r}; }
  friend bool operator==(const EMonomial&, const EMonomial&) = default;

  std::string str() const {
    if (!nonzero) return "0";
    if (r == 0) return "1";
    return r == 1 ? "E" : "E^" + std::to_string(r);
  }
};

/// E1, E2 -> 0, E3 -> E.
inline EMonomial phi_eval(const SymPoly& s) {
  EMonomial out;
  for (const auto& t : s.terms()) {
    if (t[0] || t[1]) continue;
    if (out.nonzero) throw InvariantError("phi image has two terms: " + s.str());
    out = EMonomial::power(t[2]);
  }
  return out;
}

}  // namespace kmfoam
