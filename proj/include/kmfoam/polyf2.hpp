#pragma once

// Polynomials in one variable E over F2, bit-packed by exponent.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "kmfoam/error.hpp"

namespace kmfoam {

class PolyF2 {
 public:
  PolyF2() = default;
  static PolyF2 monomial(int e) {
    if (e < 0) throw InvariantError("negative power of E");
    PolyF2 p;
    p.w_.assign(e / 64 + 1, 0);
    p.w_[e / 64] = std::uint64_t{1} << (e % 64);
    return p;
  }
  static PolyF2 one() { return monomial(0); }

  bool zero() const { return w_.empty(); }
  /// Degree, or -1 for zero.
  int degree() const {
    if (w_.empty()) return -1;
    return static_cast<int>(64 * (w_.size() - 1)) + 63 - std::countl_zero(w_.back());
  }
  /// Lowest exponent present, or -1 for zero.
  int valuation() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(64 * i) + std::countr_zero(w_[i]);
    return -1;
  }
  bool coeff(int e) const { return e >= 0 && e / 64 < static_cast<int>(w_.size()) && ((w_[e / 64] >> (e % 64)) & 1); }
  bool is_monomial() const { return !zero() && degree() == valuation(); }

  PolyF2& operator+=(const PolyF2& o) {
    if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
    for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
    trim();
    return *this;
  }
  friend PolyF2 operator+(PolyF2 a, const PolyF2& b) { return a += b; }

  friend PolyF2 operator*(const PolyF2& a, const PolyF2& b) {
    PolyF2 r;
    if (a.zero() || b.zero()) return r;
    r.w_.assign(a.w_.size() + b.w_.size(), 0);
    for (int e = 0; e <= a.degree(); ++e) {
      if (!a.coeff(e)) continue;
      int q = e / 64, s = e % 64;
      for (std::size_t i = 0; i < b.w_.size(); ++i) {
        r.w_[i + q] ^= b.w_[i] << s;
        if (s) r.w_[i + q + 1] ^= b.w_[i] >> (64 - s);
      }
    }
    r.trim();
    return r;
  }

  /// Remainder of division by a nonzero polynomial.
  PolyF2 mod(const PolyF2& d) const {
    if (d.zero()) throw InvariantError("division by zero polynomial");
    PolyF2 r = *this;
    int dd = d.degree();
    while (!r.zero() && r.degree() >= dd) r += d * monomial(r.degree() - dd);
    return r;
  }

  friend bool operator==(const PolyF2&, const PolyF2&) = default;

  std::string str() const {
    if (zero()) return "0";
    std::string s;
    for (int e = degree(); e >= 0; --e) {
      if (!coeff(e)) continue;
      if (!s.empty()) s += " + ";
      s += e == 0 ? "1" : e == 1 ? "E" : "E^" + std::to_string(e);
    }
    return s;
  }

 private:
  void trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
  }
  std::vector<std::uint64_t> w_;
};

inline PolyF2 gcd(PolyF2 a, PolyF2 b) {
  while (!b.zero()) {
    PolyF2 r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

using PolyMatrix = std::vector<std::vector<PolyF2>>;

inline PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  PolyMatrix r(n, std::vector<PolyF2>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[t][j].zero()) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

}  // namespace kmfoam
