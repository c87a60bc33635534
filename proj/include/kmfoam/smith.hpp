#pragma once

// Smith normal form over F2[E] of graded monomial matrices.
//
// A graded matrix has entries c_ij E^((a_i + b_j)/6) with c_ij in F2, for
// integer row degrees a_i and column degrees b_j. Eliminating with a pivot of
// least a_i + b_j keeps every entry of that form, so the whole computation is
// F2 elimination with the exponents read off from the degrees. Pivots come out
// with nondecreasing exponents, which makes the diagonal a divisor chain.
//
// With pivots (p_k, q_k) the result is A = S B' T where
//   S = I + sum_k u_k e_{p_k}^T,  (S)_{ab} of exponent (a_a - a_b)/6,
//   T = I + sum_k e_{q_k} v_k^T,  (T)_{ab} of exponent (b_b - b_a)/6,
// and B' has E^{r_k} at (p_k, q_k). Reordering rows p_1..p_m first and
// columns q_1..q_m first turns B' into diag(E^{r_1}, ..., E^{r_m}, 0, ...).

#include <algorithm>
#include <climits>
#include <string>
#include <vector>

#include "kmfoam/f2.hpp"
#include "kmfoam/polyf2.hpp"
#include "kmfoam/qpoly.hpp"

namespace kmfoam {

struct GradedMatrix {
  std::size_t rows = 0, cols = 0;
  BitMatrix c;  // F2 coefficients, rows x cols
  std::vector<int> row_deg, col_deg;

  GradedMatrix() = default;
  GradedMatrix(std::vector<int> rd, std::vector<int> cd)
      : rows(rd.size()), cols(cd.size()), c(zero_matrix(rd.size(), cd.size())), row_deg(std::move(rd)),
        col_deg(std::move(cd)) {}

  int exponent(std::size_t i, std::size_t j) const { return (row_deg[i] + col_deg[j]) / 6; }

  void validate() const {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        if (!c[i].get(j)) continue;
        int d = row_deg[i] + col_deg[j];
        if (d < 0 || d % 6)
          throw InvariantError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") has degree " +
                               std::to_string(d) + ", not a nonnegative multiple of 6");
      }
  }

  PolyMatrix poly() const {
    PolyMatrix m(rows, std::vector<PolyF2>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (c[i].get(j)) m[i][j] = PolyF2::monomial(exponent(i, j));
    return m;
  }
};

struct SmithPivot {
  std::size_t row, col;
  int r;  // B_kk = E^r
};

struct SmithResult {
  std::size_t rows = 0, cols = 0;
  std::vector<SmithPivot> pivots;
  BitMatrix s, t;                       // coefficient patterns of S and T
  std::vector<std::size_t> row_order;   // p_1..p_m, then the other rows
  std::vector<std::size_t> col_order;   // q_1..q_m, then the other columns
  std::vector<int> gen_deg, dual_deg;   // deg g_k, deg g~_k

  std::size_t rank() const { return pivots.size(); }
};

inline SmithResult smith_decompose(const GradedMatrix& a) {
  a.validate();
  SmithResult out;
  out.rows = a.rows;
  out.cols = a.cols;
  out.s = identity_matrix(a.rows);
  out.t = identity_matrix(a.cols);
  BitMatrix m = a.c;
  std::vector<char> row_done(a.rows, 0), col_done(a.cols, 0);
  for (;;) {
    int best = INT_MAX;
    std::size_t p = 0, q = 0;
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (row_done[i] || !m[i].any()) continue;
      for (std::size_t j = m[i].first(); j < a.cols; ++j)
        if (m[i].get(j) && a.row_deg[i] + a.col_deg[j] < best) {
          best = a.row_deg[i] + a.col_deg[j];
          p = i;
          q = j;
        }
    }
    if (best == INT_MAX) break;
    for (std::size_t i = 0; i < a.rows; ++i)
      if (i != p && m[i].get(q)) {
        m[i] ^= m[p];
        out.s[i].set(p);
      }
    for (std::size_t j = 0; j < a.cols; ++j)
      if (j != q && m[p].get(j)) out.t[q].set(j);
    m[p] = BitVec(a.cols);
    m[p].set(q);
    row_done[p] = col_done[q] = 1;
    out.pivots.push_back({p, q, best / 6});
  }
  for (const auto& pv : out.pivots) {
    out.row_order.push_back(pv.row);
    out.col_order.push_back(pv.col);
  }
  for (std::size_t i = 0; i < a.rows; ++i)
    if (!row_done[i]) out.row_order.push_back(i);
  for (std::size_t j = 0; j < a.cols; ++j)
    if (!col_done[j]) out.col_order.push_back(j);
  return out;
}

/// Inverse over F2 of an invertible square matrix.
inline BitMatrix inverse(const BitMatrix& a) {
  std::size_t n = a.size();
  BitMatrix m = a, inv = identity_matrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && !m[p].get(c)) ++p;
    if (p == n) throw InvariantError("transform is not invertible");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    for (std::size_t r = 0; r < n; ++r)
      if (r != c && m[r].get(c)) {
        m[r] ^= m[c];
        inv[r] ^= inv[c];
      }
  }
  return inv;
}

namespace detail {

// The one value of deg(M_{k,i}) + deg_i over the nonzero entries of a graded
// row, where entry (k, i) stands for E^((target - deg_i)/6).
inline int row_degree(const BitVec& row, const std::vector<int>& deg, int target, const char* what) {
  for (std::size_t i = 0; i < deg.size(); ++i) {
    if (!row.get(i)) continue;
    int d = target - deg[i];
    if (d < 0 || d % 6)
      throw InvariantError(std::string(what) + " has an entry that is not a power of E");
  }
  return target;
}

}  // namespace detail

/// Fills gen_deg and dual_deg from the inverse transforms and checks that
/// every nonzero entry of S^-1 and T^-1 is a power of E of the degree that
/// makes the generator homogeneous.
inline void generator_degrees(SmithResult& r, const GradedMatrix& a) {
  BitMatrix si = inverse(r.s);
  BitMatrix ti = transpose(inverse(r.t), r.cols);  // rows are columns of T^-1
  r.gen_deg.clear();
  r.dual_deg.clear();
  for (const auto& pv : r.pivots) {
    r.gen_deg.push_back(detail::row_degree(si[pv.row], a.row_deg, a.row_deg[pv.row], "S^-1"));
    r.dual_deg.push_back(detail::row_degree(ti[pv.col], a.col_deg, a.col_deg[pv.col], "T^-1"));
    if (r.gen_deg.back() + r.dual_deg.back() != 6 * pv.r)
      throw InvariantError("generator degrees do not add up to the invariant factor");
  }
}

/// Checks A = S B T: over F2 with the grading for any size, and with explicit
/// polynomial arithmetic up to `poly_limit` rows and columns.
inline void verify_smith(const SmithResult& r, const GradedMatrix& a, std::size_t poly_limit = 64) {
  auto bp = zero_matrix(r.rows, r.cols);
  for (const auto& pv : r.pivots) bp[pv.row].set(pv.col);
  if (multiply(multiply(r.s, bp, r.cols), r.t, r.cols) != a.c) throw InvariantError("A != S B T over F2");
  for (std::size_t i = 0; i < r.rows; ++i)
    for (std::size_t j = 0; j < r.rows; ++j) {
      int d = a.row_deg[i] - a.row_deg[j];
      if (r.s[i].get(j) && (d < 0 || d % 6)) throw InvariantError("S has an entry that is not a power of E");
    }
  for (std::size_t i = 0; i < r.cols; ++i)
    for (std::size_t j = 0; j < r.cols; ++j) {
      int d = a.col_deg[j] - a.col_deg[i];
      if (r.t[i].get(j) && (d < 0 || d % 6)) throw InvariantError("T has an entry that is not a power of E");
    }
  for (std::size_t k = 1; k < r.pivots.size(); ++k)
    if (r.pivots[k].r < r.pivots[k - 1].r) throw InvariantError("invariant factors out of order");
  if (r.rows > poly_limit || r.cols > poly_limit) return;

  PolyMatrix s(r.rows, std::vector<PolyF2>(r.rows)), t(r.cols, std::vector<PolyF2>(r.cols)),
      b(r.rows, std::vector<PolyF2>(r.cols));
  for (std::size_t i = 0; i < r.rows; ++i)
    for (std::size_t k = 0; k < r.rows; ++k) {
      std::size_t j = r.row_order[k];
      if (r.s[i].get(j)) s[i][k] = PolyF2::monomial((a.row_deg[i] - a.row_deg[j]) / 6);
    }
  for (std::size_t k = 0; k < r.cols; ++k) {
    std::size_t i = r.col_order[k];
    for (std::size_t j = 0; j < r.cols; ++j)
      if (r.t[i].get(j)) t[k][j] = PolyF2::monomial((a.col_deg[j] - a.col_deg[i]) / 6);
  }
  for (std::size_t k = 0; k < r.pivots.size(); ++k) b[k][k] = PolyF2::monomial(r.pivots[k].r);
  if (multiply(multiply(s, b), t) != a.poly()) throw InvariantError("A != S B T over F2[E]");
}

struct GradedRanks {
  QPoly rq, lq;
  std::size_t r = 0, l = 0;
};

/// r_q sums q^deg g_k over all pivots; l_q over the pivots with E^0.
inline GradedRanks graded_ranks(const SmithResult& s) {
  GradedRanks g;
  g.r = s.rank();
  for (std::size_t k = 0; k < s.pivots.size(); ++k) {
    g.rq.add(s.gen_deg.at(k));
    if (s.pivots[k].r == 0) {
      g.lq.add(s.gen_deg[k]);
      ++g.l;
    }
  }
  return g;
}

}  // namespace kmfoam
