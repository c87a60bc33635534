#pragma once

// Dotted face 4-coloring half-foams. Every placement of up to `max_dots`
// dots on the facets of each undotted coloring half-foam is generated; two
// half-foams with the same degree and the same boundary vector pair equally
// with every half-foam, so only the first of each such class is kept.

#include <set>
#include <utility>

#include "kmfoam/evaluate.hpp"
#include "kmfoam/generate.hpp"

namespace kmfoam {

struct DottedColoringFoams {
  std::uint64_t colorings = 0;  // proper face 4-colorings
  std::uint64_t undotted = 0;   // distinct undotted half-foams
  std::uint64_t placements = 0; // dotted half-foams before collapsing
  std::vector<HalfFoam> foams;  // collapsed, in generation order
};

namespace detail {

// Multisets of size <= n from [0, m), by size, then lexicographically.
inline std::vector<std::vector<int>> multisets(int m, int n) {
  std::vector<std::vector<int>> out{{}};
  for (int size = 1; size <= n; ++size) {
    std::vector<int> cur(size, 0);
    for (;;) {
      out.push_back(cur);
      int i = size - 1;
      while (i >= 0 && cur[i] == m - 1) --i;
      if (i < 0) break;
      ++cur[i];
      for (int j = i + 1; j < size; ++j) cur[j] = cur[i];
    }
  }
  return out;
}

}  // namespace detail

inline DottedColoringFoams dotted_coloring_halffoams(const Web& k, int max_dots = 3) {
  auto base = coloring_halffoams(k);
  DottedColoringFoams out;
  out.colorings = base.colorings;
  out.undotted = base.foams.size();
  std::set<std::pair<int, std::map<std::string, std::uint8_t>>> seen;
  for (const auto& f : base.foams) {
    auto c = build_complex(f);
    auto bc = boundary_colorings(c);
    int nf = bc.graph.num_facets;
    std::vector<int> rep(nf, -1);  // lowest 2-cell of each facet
    for (int cell = c.num2() - 1; cell >= 0; --cell) rep[bc.graph.facet_of[cell]] = cell;
    for (const auto& ms : detail::multisets(nf, max_dots)) {
      ++out.placements;
      std::vector<int> dots(nf, 0);
      for (int x : ms) ++dots[x];
      int degree = f.degree + 2 * static_cast<int>(ms.size());
      if (!seen.insert({degree, boundary_vector(bc, dots).values}).second) continue;
      HalfFoam d = f;
      for (int x : ms) d.coloring->dot_cells.push_back(rep[x]);
      d.degree = degree;
      d.provenance += " dots=" + std::to_string(ms.size());
      out.foams.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace kmfoam
