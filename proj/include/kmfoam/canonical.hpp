#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "kmfoam/web.hpp"

namespace kmfoam {

namespace detail {

// Breadth-first relabelling of one component from a start half-edge. Vertex k
// of the traversal owns half-edge ids 3k, 3k+1, 3k+2 in rotation order from
// the half-edge it was entered by; the code lists the twin id of each.
inline std::vector<std::uint32_t> bfs_code(const Web& w, int start, bool reversed,
                                           std::vector<int>& num, std::vector<int>& entry) {
  std::vector<int> order{w.vertex_of(start)};
  num[order[0]] = 0;
  entry[order[0]] = start;
  auto rot = [&](int h) { return reversed ? w.prev_ccw(h) : w.next_ccw(h); };
  for (std::size_t i = 0; i < order.size(); ++i) {
    int h = entry[order[i]];
    for (int k = 0; k < 3; ++k, h = rot(h)) {
      int u = w.far_vertex(h);
      if (num[u] < 0) {
        num[u] = static_cast<int>(order.size());
        entry[u] = Web::twin(h);
        order.push_back(u);
      }
    }
  }
  auto id = [&](int h) {
    int v = w.vertex_of(h);
    int k = 0;
    for (int g = entry[v]; g != h; g = rot(g)) ++k;
    return static_cast<std::uint32_t>(3 * num[v] + k);
  };
  std::vector<std::uint32_t> code;
  code.reserve(3 * order.size() + 1);
  code.push_back(static_cast<std::uint32_t>(order.size()));
  for (int v : order) {
    int h = entry[v];
    for (int k = 0; k < 3; ++k, h = rot(h)) code.push_back(id(Web::twin(h)));
  }
  for (int v : order) num[v] = -1;
  return code;
}

}  // namespace detail

/// Isomorphism-invariant encoding of the embedded web: the least breadth-first
/// encoding over all start half-edges and both orientations, per connected
/// component, components sorted, followed by the number of free loops.
inline std::string canonical_code(const Web& w) {
  int nv = w.num_vertices();
  std::vector<int> comp(nv, -1);
  int ncomp = 0;
  for (int v = 0; v < nv; ++v) {
    if (comp[v] >= 0) continue;
    std::vector<int> stack{v};
    comp[v] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int h : w.rotation(x))
        if (comp[w.far_vertex(h)] < 0) {
          comp[w.far_vertex(h)] = ncomp;
          stack.push_back(w.far_vertex(h));
        }
    }
    ++ncomp;
  }
  std::vector<std::vector<std::uint32_t>> best(ncomp);
  std::vector<int> num(nv, -1), entry(nv, -1);
  for (int h = 0; h < w.num_half_edges(); ++h) {
    int c = comp[w.vertex_of(h)];
    for (bool rev : {false, true}) {
      auto code = detail::bfs_code(w, h, rev, num, entry);
      if (best[c].empty() || code < best[c]) best[c] = std::move(code);
    }
  }
  std::sort(best.begin(), best.end());
  std::string out;
  auto put = [&](std::uint32_t x) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
  };
  for (const auto& c : best)
    for (auto x : c) put(x);
  put(0);
  put(static_cast<std::uint32_t>(w.num_loops()));
  return out;
}

inline std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

}  // namespace kmfoam
