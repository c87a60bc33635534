#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "kmfoam/web.hpp"

namespace kmfoam {

namespace detail {

// Edges in breadth-first order from vertex 0 of each component, so that
// backtracking meets the constraints of a vertex as early as possible.
inline std::vector<int> bfs_edge_order(const Web& w) {
  std::vector<int> order;
  std::vector<char> vseen(w.num_vertices(), 0), eseen(w.num_edges(), 0);
  for (int root = 0; root < w.num_vertices(); ++root) {
    if (vseen[root]) continue;
    std::vector<int> queue{root};
    vseen[root] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int h : w.rotation(v)) {
        int e = Web::edge_of(h);
        if (!eseen[e]) {
          eseen[e] = 1;
          order.push_back(e);
        }
        int u = w.far_vertex(h);
        if (!vseen[u]) {
          vseen[u] = 1;
          queue.push_back(u);
        }
      }
    }
  }
  return order;
}

}  // namespace detail

/// Calls visit(colors) for every proper 3-edge-coloring (colors per edge in
/// {0,1,2}); free loops are not enumerated.
inline void for_each_tait_coloring(const Web& w,
                                   const std::function<void(const std::vector<std::uint8_t>&)>& visit) {
  auto order = detail::bfs_edge_order(w);
  std::vector<std::uint8_t> color(w.num_edges(), 3);
  std::vector<std::uint8_t> used(w.num_vertices(), 0);  // bitmask of colors at vertex
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == order.size()) {
      visit(color);
      return;
    }
    int e = order[i];
    int a = w.vertex_of(2 * e), b = w.vertex_of(2 * e + 1);
    for (std::uint8_t c = 0; c < 3; ++c) {
      std::uint8_t bit = 1u << c;
      if ((used[a] | used[b]) & bit) continue;
      if (a == b) continue;  // a self-loop sees its own color twice
      used[a] |= bit;
      used[b] |= bit;
      color[e] = c;
      rec(i + 1);
      used[a] &= ~bit;
      used[b] &= ~bit;
    }
    color[e] = 3;
  };
  rec(0);
}

/// Number of Tait colorings; Tait(empty) = 1 and each free loop contributes a factor 3.
inline std::uint64_t tait_count(const Web& w) {
  std::uint64_t n = 0;
  for_each_tait_coloring(w, [&](const std::vector<std::uint8_t>&) { ++n; });
  for (int i = 0; i < w.num_loops(); ++i) n *= 3;
  return n;
}

/// Labels of all cut edges of the underlying multigraph.
inline std::set<Label> find_bridges(const Web& w) {
  int nv = w.num_vertices();
  std::vector<int> disc(nv, -1), low(nv, 0);
  std::set<Label> out;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
    disc[v] = low[v] = timer++;
    for (int h : w.rotation(v)) {
      int e = Web::edge_of(h);
      if (e == parent_edge) continue;
      int u = w.far_vertex(h);
      if (disc[u] < 0) {
        dfs(u, e);
        low[v] = std::min(low[v], low[u]);
        if (low[u] > disc[v]) out.insert(w.edge_label(e));
      } else {
        low[v] = std::min(low[v], disc[u]);
      }
    }
  };
  for (int v = 0; v < nv; ++v)
    if (disc[v] < 0) dfs(v, -1);
  return out;
}

}  // namespace kmfoam
