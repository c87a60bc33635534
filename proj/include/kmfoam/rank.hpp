#pragma once

// Rank over F2 of the leading n x n block of a symmetric matrix, updated one
// row and column at a time.
//
// The rows seen so far are kept as an echelon basis plus a list of kernel
// relations, each with the combination of original rows that produced it. A
// new column extends every stored vector by the parity of its combination
// against the column; relations that pick up a 1 there stop being relations.

#include <cstdint>
#include <string>
#include <vector>

#include "kmfoam/error.hpp"
#include "kmfoam/f2.hpp"

namespace kmfoam {

class StreamingRank {
 public:
  /// Adds row and column n (0-based) given the entries (n, 0..n).
  std::size_t push(const std::vector<std::uint8_t>& row) {
    std::size_t n = history_.size();
    if (row.size() != n + 1) throw InvariantError("row " + std::to_string(n) + " has the wrong length");
    // The new column equals the new row by symmetry.
    BitVec col(n + 1);
    for (std::size_t j = 0; j <= n; ++j) col.set(j, row[j] != 0);
    for (auto& b : basis_) b.vec.push_back(b.comb.dot(col));
    int fresh = -1;
    for (std::size_t k = 0; k < kernel_.size(); ++k) {
      auto& z = kernel_[k];
      z.vec.push_back(z.comb.dot(col));
      if (!z.vec.get(n)) continue;
      if (fresh < 0)
        fresh = static_cast<int>(k);
      else
        z ^= kernel_[fresh];
    }
    if (fresh >= 0) {
      basis_.push_back(kernel_[fresh]);
      kernel_.erase(kernel_.begin() + fresh);
    }
    Entry e{col, BitVec(n + 1)};
    e.comb.set(n);
    reduce(e);
    if (e.vec.any())
      basis_.push_back(std::move(e));
    else
      kernel_.push_back(std::move(e));
    for (auto& b : basis_) b.comb.resize(n + 1);
    for (auto& z : kernel_) z.comb.resize(n + 1);
    history_.push_back(basis_.size());
    return basis_.size();
  }

  std::size_t size() const { return history_.size(); }
  std::size_t rank() const { return basis_.size(); }
  /// ranks[n-1] is the rank of the leading n x n block.
  const std::vector<std::size_t>& history() const { return history_; }

  /// First n with ranks[n-1] equal to the final rank.
  std::size_t saturation_index() const {
    for (std::size_t i = 0; i < history_.size(); ++i)
      if (history_[i] == rank()) return i + 1;
    return 0;
  }

 private:
  struct Entry {
    BitVec vec, comb;
    Entry& operator^=(const Entry& o) {
      vec ^= o.vec;
      comb ^= o.comb;
      return *this;
    }
  };

  void reduce(Entry& e) const {
    for (const auto& b : basis_) {
      std::size_t p = b.vec.first();
      if (e.vec.get(p)) e ^= b;
    }
  }

  // basis_ is kept so that each vector's leading index is absent from all
  // later ones; reduce() relies on that ordering.
  std::vector<Entry> basis_, kernel_;
  std::vector<std::size_t> history_;
};

/// Rejects a square F2 matrix that differs from its transpose.
inline void require_symmetric(const std::vector<std::vector<std::uint8_t>>& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((m[i][j] != 0) != (m[j][i] != 0))
        throw InvariantError("Gram matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

}  // namespace kmfoam
