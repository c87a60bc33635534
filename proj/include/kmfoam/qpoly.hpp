#pragma once

// Laurent polynomials in q with integer coefficients, used for graded
// dimensions and ranks.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace kmfoam {

class QPoly {
 public:
  QPoly() = default;
  static QPoly power(int e, std::int64_t c = 1) {
    QPoly p;
    p.add(e, c);
    return p;
  }

  void add(int e, std::int64_t c = 1) {
    if (!c) return;
    auto& x = t_[e];
    x += c;
    if (!x) t_.erase(e);
  }
  const std::map<int, std::int64_t>& terms() const { return t_; }
  bool zero() const { return t_.empty(); }
  std::int64_t at_one() const {
    std::int64_t s = 0;
    for (auto [e, c] : t_) s += c;
    return s;
  }

  QPoly& operator+=(const QPoly& o) {
    for (auto [e, c] : o.t_) add(e, c);
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    for (auto [e, c] : o.t_) add(e, -c);
    return *this;
  }
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    for (auto [e, c] : a.t_)
      for (auto [f, d] : b.t_) r.add(e + f, c * d);
    return r;
  }
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Invariant under q -> 1/q.
  bool palindromic() const {
    for (auto [e, c] : t_) {
      auto it = t_.find(-e);
      if (it == t_.end() || it->second != c) return false;
    }
    return true;
  }

  /// Quotient by a divisor whose top coefficient is 1, if exact.
  std::optional<QPoly> divide(const QPoly& d) const {
    if (d.zero() || d.t_.rbegin()->second != 1) return std::nullopt;
    int dtop = d.t_.rbegin()->first, dlow = d.t_.begin()->first;
    if (zero()) return QPoly{};
    int floor = t_.begin()->first - dlow;  // least possible quotient exponent
    QPoly rem = *this, quot;
    while (!rem.zero()) {
      int top = rem.t_.rbegin()->first;
      if (top - dtop < floor) return std::nullopt;
      std::int64_t c = rem.t_.rbegin()->second;
      QPoly step = power(top - dtop, c);
      quot += step;
      rem -= step * d;
    }
    return quot;
  }

  /// "even", "odd", "mixed" or "none" for the exponents present.
  std::string parity() const {
    bool even = false, odd = false;
    for (auto [e, c] : t_) (e % 2 ? odd : even) = true;
    return even && odd ? "mixed" : even ? "even" : odd ? "odd" : "none";
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto [e, c] : t_) {
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      std::int64_t a = c < 0 ? -c : c;
      std::string mono = e == 0 ? "" : e == 1 ? "q" : "q^" + std::to_string(e);
      if (mono.empty())
        s += std::to_string(a);
      else
        s += (a == 1 ? "" : std::to_string(a)) + mono;
    }
    return s;
  }

 private:
  std::map<int, std::int64_t> t_;
};

/// [3]! = (q^2 + 1 + q^-2)(q + q^-1).
inline QPoly quantum_factorial3() {
  QPoly a, b;
  a.add(2);
  a.add(0);
  a.add(-2);
  b.add(1);
  b.add(-1);
  return a * b;
}

struct QuantumDiagnostics {
  bool palindromic = false;
  std::optional<QPoly> factorial_quotient;  // set when divisible by [3]!
  std::string parity;
};

inline QuantumDiagnostics quantum_diagnostics(const QPoly& p) {
  return {p.palindromic(), p.divide(quantum_factorial3()), p.parity()};
}

}  // namespace kmfoam
