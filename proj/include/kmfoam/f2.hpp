#pragma once

// Bit-packed vectors and matrices over F2.

#include <bit>
#include <cstdint>
#include <vector>

namespace kmfoam {

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v = true) {
    if (v)
      w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else
      w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  void resize(std::size_t n) {
    n_ = n;
    w_.resize((n + 63) / 64, 0);
  }
  void push_back(bool v) {
    resize(n_ + 1);
    set(n_ - 1, v);
  }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  /// Lowest set index, or size() when zero.
  std::size_t first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
    return n_;
  }
  /// Parity of the common support.
  bool dot(const BitVec& o) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < std::min(w_.size(), o.w_.size()); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
  }
  friend bool operator==(const BitVec& a, const BitVec& b) { return a.n_ == b.n_ && a.w_ == b.w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

using BitMatrix = std::vector<BitVec>;  // rows

inline BitMatrix zero_matrix(std::size_t rows, std::size_t cols) { return BitMatrix(rows, BitVec(cols)); }

inline BitMatrix identity_matrix(std::size_t n) {
  auto m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i].set(i);
  return m;
}

inline BitMatrix transpose(const BitMatrix& a, std::size_t cols) {
  auto t = zero_matrix(cols, a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (a[i].get(j)) t[j].set(i);
  return t;
}

inline BitMatrix multiply(const BitMatrix& a, const BitMatrix& b, std::size_t cols) {
  auto r = zero_matrix(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i].get(k)) r[i] ^= b[k];
  return r;
}

inline std::size_t rank(BitMatrix m) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::size_t p = m[i].first();
    if (p == m[i].size()) continue;
    ++r;
    for (std::size_t k = i + 1; k < m.size(); ++k)
      if (m[k].get(p)) m[k] ^= m[i];
  }
  return r;
}

}  // namespace kmfoam
