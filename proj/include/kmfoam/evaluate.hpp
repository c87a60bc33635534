#pragma once

// Closed-foam evaluation over F2.
//
// A coloring assigns one of three colors to each facet, distinct at every
// seam. Each coloring c contributes P/Q with P = prod X_c(f)^d(f) and
// Q = prod_{i<j} (X_i + X_j)^(chi(F_ij)/2), where F_ij is the closed surface
// formed by the facets colored i or j. <F> is the sum, a symmetric polynomial.
//
// Besides the exact route, foams are evaluated at the point X = (1, w, w^2) of
// GF(4), where E1 = E2 = 0 and E3 = 1: this returns the coefficient of the
// phi-image directly. The value of a glued foam factors through the colorings
// of its two halves grouped by their boundary colors, which is what the Gram
// matrix assembly uses.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kmfoam/complex.hpp"
#include "kmfoam/poly.hpp"

namespace kmfoam {

using Coloring = std::vector<std::uint8_t>;  // color 0, 1, 2 per facet

/// Facets in breadth-first order along seams, so that seam constraints are
/// checked as early as possible during backtracking.
inline std::vector<int> seam_order(const FacetGraph& g) {
  std::vector<std::vector<int>> adj(g.num_facets);
  for (const auto& s : g.seams)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (a != b && s[a] != s[b]) adj[s[a]].push_back(s[b]);
  std::vector<int> order;
  std::vector<char> seen(g.num_facets, 0);
  for (int f = 0; f < g.num_facets; ++f) {
    if (seen[f]) continue;
    seen[f] = 1;
    order.push_back(f);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i)
      for (int n : adj[order[i]])
        if (!seen[n]) {
          seen[n] = 1;
          order.push_back(n);
        }
  }
  return order;
}

/// Calls visit(coloring) for every admissible coloring.
template <class Visit>
void for_each_admissible_coloring(const FacetGraph& g, Visit&& visit) {
  if (g.repeated_seam_facet) return;
  auto order = seam_order(g);
  std::vector<std::vector<int>> adj(g.num_facets);
  for (const auto& s : g.seams)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (a != b) adj[s[a]].push_back(s[b]);
  Coloring col(g.num_facets, 0);
  std::vector<char> set(g.num_facets, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == order.size()) {
      visit(static_cast<const Coloring&>(col));
      return;
    }
    int f = order[i];
    for (std::uint8_t c = 0; c < 3; ++c) {
      bool ok = true;
      for (int n : adj[f])
        if (set[n] && col[n] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      col[f] = c;
      set[f] = 1;
      self(self, i + 1);
      set[f] = 0;
    }
  };
  rec(rec, 0);
}

inline std::vector<Coloring> admissible_colorings(const FacetGraph& g) {
  std::vector<Coloring> out;
  for_each_admissible_coloring(g, [&](const Coloring& c) { out.push_back(c); });
  return out;
}

/// chi(F_12), chi(F_13), chi(F_23) of a colored foam (not halved).
inline std::array<int, 3> pair_chis(const FacetGraph& g, const Coloring& col) {
  static constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  std::array<int, 3> chi{};
  std::vector<char> in(g.num_facets);
  for (int p = 0; p < 3; ++p) {
    for (int f = 0; f < g.num_facets; ++f) in[f] = col[f] == pairs[p][0] || col[f] == pairs[p][1];
    chi[p] = euler_char(g, in);
  }
  return chi;
}

/// chi(F_ij)/2 for (ij) = 12, 13, 23.
inline std::array<int, 3> q_exponents(const FacetGraph& g, const Coloring& col) {
  auto chi = pair_chis(g, col);
  for (int& x : chi) {
    if (x % 2) throw InvariantError("malformed foam: a bicolored surface has odd Euler characteristic");
    x /= 2;
  }
  return chi;
}

inline std::array<int, 3> q_exponents(const CellComplex& c, const Coloring& col) {
  return q_exponents(facet_graph(c), col);
}

inline Exp3 dot_exponents(const FacetGraph& g, const Coloring& col) {
  Exp3 p{0, 0, 0};
  for (int f = 0; f < g.num_facets; ++f) p[col[f]] += g.dots[f];
  return p;
}

namespace detail {

inline void require_closed(const CellComplex& c, const FacetGraph& g) {
  if (!g.boundary_cells.empty()) throw ValidationError("foam is not closed");
  (void)c;
}

}  // namespace detail

/// <F> as an element of F2[E1, E2, E3], computed over a common denominator.
/// Checks that a nonzero result is homogeneous of degree deg F.
inline SymPoly evaluate_bracket(const CellComplex& c, const FacetGraph& g) {
  detail::require_closed(c, g);
  static constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  // Terms with equal data cancel in pairs.
  std::map<std::pair<Exp3, std::array<int, 3>>, int> terms;
  for_each_admissible_coloring(g, [&](const Coloring& col) {
    terms[{dot_exponents(g, col), q_exponents(g, col)}] ^= 1;
  });
  std::array<int, 3> top{0, 0, 0};
  for (const auto& [k, odd] : terms)
    if (odd)
      for (int p = 0; p < 3; ++p) top[p] = std::max(top[p], k.second[p]);
  MultiPoly num;
  for (const auto& [k, odd] : terms) {
    if (!odd) continue;
    MultiPoly t = MultiPoly::monomial(k.first);
    for (int p = 0; p < 3; ++p) t = t * MultiPoly::pair_sum(pairs[p][0], pairs[p][1]).pow(top[p] - k.second[p]);
    num += t;
  }
  for (int p = 0; p < 3; ++p)
    for (int n = 0; n < top[p]; ++n) num = num.divide_pair_sum(pairs[p][0], pairs[p][1]);
  SymPoly s = to_elementary(num);
  if (!s.zero() && s.degree() != foam_degree(c, g))
    throw InvariantError("<F> has degree " + std::to_string(s.degree()) + " but the foam has degree " +
                         std::to_string(foam_degree(c, g)));
  return s;
}

inline SymPoly evaluate_bracket(const CellComplex& c) { return evaluate_bracket(c, facet_graph(c)); }

/// The F2 value: <F> at E1 = E2 = E3 = 0.
inline int jflat(const CellComplex& c) { return evaluate_bracket(c).contains({0, 0, 0}) ? 1 : 0; }

// GF(4) = {0, 1, w, w^2} encoded as 0, 1, 2, 3; addition is xor.
namespace gf4 {

inline std::uint8_t power(int k) { return static_cast<std::uint8_t>(1 + ((k % 3) + 3) % 3); }

inline std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
  if (!a || !b) return 0;
  return power((a - 1) + (b - 1));
}

}  // namespace gf4

/// Exponent k with P/Q = w^k at X = (1, w, w^2). Here X1+X2 = w^2, X1+X3 = w
/// and X2+X3 = 1, so k = sum d(f) c(f) - chi_12 - chi_13/2, and chi_13/2 is
/// 2 chi_13 mod 3. Written in terms of chi so that it is additive over the
/// halves of a glued foam.
inline int omega_exponent(const FacetGraph& g, const Coloring& col) {
  auto chi = pair_chis(g, col);
  int k = 0;
  for (int f = 0; f < g.num_facets; ++f) k += g.dots[f] * col[f];
  k -= chi[0] + 2 * chi[1];
  return ((k % 3) + 3) % 3;
}

/// <F> at X = (1, w, w^2), i.e. the coefficient of its phi-image.
inline std::uint8_t evaluate_at_omega(const CellComplex& c, const FacetGraph& g) {
  detail::require_closed(c, g);
  std::uint8_t v = 0;
  for_each_admissible_coloring(g, [&](const Coloring& col) { v ^= gf4::power(omega_exponent(g, col)); });
  return v;
}

/// The contribution of a half-foam to glued evaluations: the GF(4) sum of
/// w^k over its colorings, grouped by the colors seen along the boundary web
/// (edges by increasing label, then loops).
struct BoundaryVector {
  std::map<std::string, std::uint8_t> values;  // zero entries dropped
};

/// The colorings of a half-foam with their boundary colors and the part of
/// the w-exponent that does not depend on dots, so that vectors for many dot
/// placements on one foam come from a single enumeration.
struct BoundaryColorings {
  FacetGraph graph;
  std::vector<std::string> keys;
  std::vector<int> base;  // -chi_12 - 2 chi_13
  std::vector<Coloring> colorings;
};

inline BoundaryColorings boundary_colorings(const CellComplex& c) {
  BoundaryColorings out;
  out.graph = facet_graph(c);
  const auto& g = out.graph;
  // A null top is the empty boundary web.
  if (!c.top && !g.boundary_cells.empty()) throw ValidationError("half-foam has no boundary web");
  std::vector<Label> edges, loops;
  if (c.top) {
    edges = c.top->edge_labels();
    for (const auto& l : c.top->loops()) loops.push_back(l.label);
  }
  std::sort(edges.begin(), edges.end());
  std::sort(loops.begin(), loops.end());
  std::vector<int> facets;
  for (Label l : edges) facets.push_back(g.facet_of[g.side_of[c.top_cells.e(l)]]);
  for (Label l : loops) facets.push_back(g.facet_of[g.side_of[c.top_cells.lp(l)]]);
  for_each_admissible_coloring(g, [&](const Coloring& col) {
    std::string key(facets.size(), '0');
    for (std::size_t i = 0; i < facets.size(); ++i) key[i] = static_cast<char>('0' + col[facets[i]]);
    auto chi = pair_chis(g, col);
    out.keys.push_back(std::move(key));
    out.base.push_back(-chi[0] - 2 * chi[1]);
    out.colorings.push_back(col);
  });
  return out;
}

/// The boundary vector with `dots` (per facet of bc.graph) in place of the
/// foam's own dots.
inline BoundaryVector boundary_vector(const BoundaryColorings& bc, const std::vector<int>& dots) {
  BoundaryVector out;
  for (std::size_t n = 0; n < bc.keys.size(); ++n) {
    int k = bc.base[n];
    for (std::size_t f = 0; f < dots.size(); ++f) k += dots[f] * bc.colorings[n][f];
    out.values[bc.keys[n]] ^= gf4::power(k);
  }
  std::erase_if(out.values, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline BoundaryVector boundary_vector(const CellComplex& c) {
  auto bc = boundary_colorings(c);
  return boundary_vector(bc, bc.graph.dots);
}

/// The GF(4) value of the foam glued from two halves with these vectors.
inline std::uint8_t pair_value(const BoundaryVector& a, const BoundaryVector& b) {
  const auto& small = a.values.size() <= b.values.size() ? a.values : b.values;
  const auto& large = a.values.size() <= b.values.size() ? b.values : a.values;
  std::uint8_t v = 0;
  for (const auto& [key, x] : small) {
    auto it = large.find(key);
    if (it != large.end()) v ^= gf4::mul(x, it->second);
  }
  return v;
}

/// Gram entry over F2[E] from a GF(4) value and the two half-foam degrees.
inline EMonomial gram_entry(std::uint8_t value, int deg_a, int deg_b) {
  if (value == 0) return EMonomial::zero();
  if (value != 1) throw InvariantError("glued evaluation is not in F2");
  int d = deg_a + deg_b;
  if (d < 0 || d % 6) throw InvariantError("nonzero evaluation of a foam of degree " + std::to_string(d));
  return EMonomial::power(d / 6);
}

}  // namespace kmfoam
