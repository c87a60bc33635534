#pragma once

// Independent closed-foam oracle: hand-described facets and colorings whose
// P/Q terms are summed one by one at random points of GF(2^16), compared
// with a computed symmetric polynomial evaluated at the same points.

#include <algorithm>
#include <array>
#include <random>
#include <utility>
#include <vector>

#include "kmfoam/evaluate.hpp"
#include "kmfoam/generate.hpp"
#include "util.hpp"

namespace oracle {

using namespace kmfoam;

// GF(2^16) modulo x^16 + x^12 + x^3 + x + 1, used as an independent place to
// evaluate rational functions.
struct GF16 {
  static std::uint32_t mul(std::uint32_t a, std::uint32_t b) {
    std::uint32_t r = 0;
    while (b) {
      if (b & 1) r ^= a;
      b >>= 1;
      a <<= 1;
      if (a & 0x10000) a ^= 0x1100B;
    }
    return r;
  }
  static std::uint32_t pow(std::uint32_t a, std::uint32_t n) {
    std::uint32_t r = 1;
    for (; n; n >>= 1, a = mul(a, a))
      if (n & 1) r = mul(r, a);
    return r;
  }
  static std::uint32_t inv(std::uint32_t a) { return pow(a, 0xFFFE); }
};

// Closed foam described by hand: facets with dots, and for each admissible
// coloring the Euler characteristics of the three bicolored surfaces.
struct FacetData {
  std::vector<int> dots;
  std::vector<std::pair<std::vector<int>, std::array<int, 3>>> colorings;
};

// Sum of P/Q over the colorings, term by term, at the point x.
inline std::uint32_t oracle_value(const FacetData& d, const std::array<std::uint32_t, 3>& x) {
  std::uint32_t sum = 0;
  std::uint32_t pair[3] = {x[0] ^ x[1], x[0] ^ x[2], x[1] ^ x[2]};
  for (const auto& [col, chi] : d.colorings) {
    std::uint32_t t = 1;
    for (std::size_t f = 0; f < col.size(); ++f) t = GF16::mul(t, GF16::pow(x[col[f]], d.dots[f]));
    for (int p = 0; p < 3; ++p) {
      int e = chi[p] / 2;
      t = GF16::mul(t, e >= 0 ? GF16::inv(GF16::pow(pair[p], e)) : GF16::pow(pair[p], -e));
    }
    sum ^= t;
  }
  return sum;
}

inline std::uint32_t sym_value(const SymPoly& s, const std::array<std::uint32_t, 3>& x) {
  std::uint32_t e[3] = {x[0] ^ x[1] ^ x[2], GF16::mul(x[0], x[1]) ^ GF16::mul(x[0], x[2]) ^ GF16::mul(x[1], x[2]),
                        GF16::mul(GF16::mul(x[0], x[1]), x[2])};
  std::uint32_t sum = 0;
  for (const auto& t : s.terms())
    sum ^= GF16::mul(GF16::mul(GF16::pow(e[0], t[0]), GF16::pow(e[1], t[1])), GF16::pow(e[2], t[2]));
  return sum;
}

inline FacetData sphere_data(int dots) {
  FacetData d{{dots}, {}};
  d.colorings.push_back({{0}, {2, 2, 0}});
  d.colorings.push_back({{1}, {2, 0, 2}});
  d.colorings.push_back({{2}, {0, 2, 2}});
  return d;
}

inline FacetData theta_data(std::vector<int> dots) {
  FacetData d{std::move(dots), {}};
  std::vector<int> p{0, 1, 2};
  do d.colorings.push_back({p, {2, 2, 2}});
  while (std::next_permutation(p.begin(), p.end()));
  return d;
}

/// True when s and the term-by-term sum agree at `trials` random points.
inline bool matches(const SymPoly& s, const FacetData& d, int trials = 20) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < trials; ++trial) {
    std::array<std::uint32_t, 3> x;
    do {
      for (auto& v : x) v = 1 + rng() % 0xFFFF;
    } while (x[0] == x[1] || x[0] == x[2] || x[1] == x[2]);
    if (sym_value(s, x) != oracle_value(d, x)) return false;
  }
  return true;
}

inline CellComplex sphere_complex(int dots) {
  auto circle = std::make_shared<const Web>(bundled("circle"));
  MoveSite s{MoveKind::Disk, {}, {}, circle->loops()[0].label, 0};
  auto mr = std::make_shared<const MoveResult>(apply_move(*circle, s));
  Movie m;
  m.slices = {child_web(mr)};
  m.push({s, dots, false}, mr, circle);
  m.push({s, 0, true}, mr, child_web(mr));
  return build_complex(m);
}

inline CellComplex theta_complex(const std::vector<int>& dots) {
  auto basis = reducible_basis(reduce(bundled("theta")).tree);
  auto c = glue(basis[0].movie, basis[0].movie);
  auto g = facet_graph(c);
  std::fill(c.dots.begin(), c.dots.end(), 0);
  for (int f = 0; f < 3; ++f)
    for (int cell = 0; cell < c.num2(); ++cell)
      if (g.facet_of[cell] == f) {
        c.dots[cell] = dots[f];
        break;
      }
  return c;
}

}  // namespace oracle
