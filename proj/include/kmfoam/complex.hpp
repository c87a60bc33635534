#pragma once

// Foams as combinatorial 2-complexes.
//
// Cells are plain integers. A 2-cell stores its boundary as the cyclic list of
// 1-cells it runs along (a 1-cell may appear twice). Web slices contribute one
// 0-cell per vertex, one 1-cell per edge, and for each free loop a 1-cell
// closed up at one auxiliary 0-cell.

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <numeric>
#include <vector>

#include "kmfoam/moves.hpp"

namespace kmfoam {

/// Cells of one web slice, indexed by label (-1 where absent).
struct SliceCells {
  std::vector<int> vertex, edge, loop, loop_aux;

  int at(const std::vector<int>& v, Label l, const char* what) const {
    int c = l >= 0 && static_cast<std::size_t>(l) < v.size() ? v[l] : -1;
    if (c < 0) throw InvariantError(std::string("slice has no ") + what + " with label " + std::to_string(l));
    return c;
  }
  int v(Label l) const { return at(vertex, l, "vertex"); }
  int e(Label l) const { return at(edge, l, "edge"); }
  int lp(Label l) const { return at(loop, l, "loop"); }
  int aux(Label l) const { return at(loop_aux, l, "loop"); }
};

struct CellComplex {
  int num0 = 0;
  std::vector<std::array<int, 2>> cells1;
  std::vector<std::vector<int>> cells2;
  std::vector<int> dots;  // per 2-cell
  WebPtr top;             // boundary web of a half-foam (null when closed)
  SliceCells top_cells;

  int num1() const { return static_cast<int>(cells1.size()); }
  int num2() const { return static_cast<int>(cells2.size()); }
  int euler() const { return num0 - num1() + num2(); }
  int total_dots() const { return std::accumulate(dots.begin(), dots.end(), 0); }
};

class ComplexBuilder {
 public:
  int add0() { return c_.num0++; }
  int add1(int a, int b) {
    c_.cells1.push_back({a, b});
    return c_.num1() - 1;
  }
  int add2(std::vector<int> boundary, int dots = 0) {
    c_.cells2.push_back(std::move(boundary));
    c_.dots.push_back(dots);
    return c_.num2() - 1;
  }

  SliceCells add_slice(const Web& w) {
    SliceCells s;
    std::size_t n = static_cast<std::size_t>(w.next_label());
    s.vertex.assign(n, -1);
    s.edge.assign(n, -1);
    s.loop.assign(n, -1);
    s.loop_aux.assign(n, -1);
    for (int v = 0; v < w.num_vertices(); ++v) s.vertex[w.vertex_label(v)] = add0();
    for (int e = 0; e < w.num_edges(); ++e)
      s.edge[w.edge_label(e)] = add1(s.vertex[w.vertex_label(w.vertex_of(2 * e))],
                                     s.vertex[w.vertex_label(w.vertex_of(2 * e + 1))]);
    for (const auto& lp : w.loops()) {
      int p = add0();
      s.loop_aux[lp.label] = p;
      s.loop[lp.label] = add1(p, p);
    }
    return s;
  }

  /// The identity cylinder over the cells two slices share: a vertical seam
  /// per common vertex, a rectangle per common edge, an annulus per common
  /// loop. Returns the vertical 1-cells by vertex label.
  std::vector<int> add_cylinder(const Web& s, const SliceCells& sc, const Web& r, const SliceCells& rc) {
    std::vector<int> vert(static_cast<std::size_t>(std::max(s.next_label(), r.next_label())), -1);
    for (int v = 0; v < s.num_vertices(); ++v) {
      Label l = s.vertex_label(v);
      if (r.find_vertex(l)) vert[l] = add1(rc.v(l), sc.v(l));
    }
    for (int e = 0; e < s.num_edges(); ++e) {
      Label l = s.edge_label(e);
      auto e2 = r.find_edge(l);
      if (!e2) continue;
      Label a = s.vertex_label(s.vertex_of(2 * e)), b = s.vertex_label(s.vertex_of(2 * e + 1));
      Label a2 = r.vertex_label(r.vertex_of(2 * *e2)), b2 = r.vertex_label(r.vertex_of(2 * *e2 + 1));
      require((a == a2 && b == b2) || (a == b2 && b == a2), "kept edge changed its endpoints");
      add2({rc.e(l), vert[b], sc.e(l), vert[a]});
    }
    for (const auto& lp : s.loops()) {
      if (!r.find_loop(lp.label)) continue;
      int side = add1(rc.aux(lp.label), sc.aux(lp.label));
      add2({rc.lp(lp.label), side, sc.lp(lp.label), side});
    }
    return vert;
  }

  /// One elementary cobordism between the source web S of a move and its
  /// result R; `dots` decorate the cap (disk) or the first sheet (bigon).
  void add_layer(const Web& S, const SliceCells& sc, const Web& R, const SliceCells& rc, const MoveResult& m,
                 const MoveSite& site, int dots) {
    require(m.generic, "no cobordism for a degenerate site");
    auto vert = add_cylinder(S, sc, R, rc);
    auto V = [&](Label l) {
      int c = l >= 0 && static_cast<std::size_t>(l) < vert.size() ? vert[l] : -1;
      require(c >= 0, "far vertex is not kept by the move");
      return c;
    };
    const auto& sv = m.src_v;
    const auto& se = m.src_e;
    const auto& f = m.far;
    const auto& re = m.res_e;
    switch (site.kind) {
      case MoveKind::Disk:
        add2({sc.lp(*m.src_loop)}, dots);
        break;
      case MoveKind::Bigon: {
        int s = add1(sc.v(sv[0]), sc.v(sv[1]));
        if (m.res_loop) {
          int w = add1(rc.aux(*m.res_loop), sc.v(sv[0]));
          add2({rc.lp(*m.res_loop), w, sc.e(se[2]), s, w});
        } else {
          add2({rc.e(re[0]), V(f[0]), sc.e(se[2]), s, sc.e(se[3]), V(f[1])});
        }
        add2({sc.e(se[0]), s}, dots);
        add2({sc.e(se[1]), s});
        break;
      }
      case MoveKind::Triangle: {
        int t = add0();
        int zs = add1(rc.v(m.res_v[0]), t);
        std::array<int, 3> arc;
        for (int k = 0; k < 3; ++k) arc[k] = add1(t, sc.v(sv[k]));
        for (int k = 0; k < 3; ++k) add2({rc.e(re[k]), V(f[k]), sc.e(se[3 + k]), arc[k], zs});
        for (int k = 0; k < 3; ++k) add2({sc.e(se[k]), arc[(k + 1) % 3], arc[k]});
        break;
      }
      case MoveKind::Square: {
        int t = site.variant ? 1 : 0;
        std::array<int, 2> arc;
        for (int j = 0; j < 2; ++j) {
          int i0 = t + 2 * j, i1 = (i0 + 1) % 4;
          arc[j] = add1(sc.v(sv[i0]), sc.v(sv[i1]));
          add2({rc.e(re[j]), V(f[i0]), sc.e(se[4 + i0]), arc[j], sc.e(se[4 + i1]), V(f[i1])});
          add2({sc.e(se[i0]), arc[j]});
        }
        add2({arc[0], sc.e(se[(t + 1) % 4]), arc[1], sc.e(se[(t + 3) % 4])});
        break;
      }
      case MoveKind::Zip: {
        // far = {A,B,C,D}; res_e = {B-x, x-C, y-A, D-y, x-y}
        int a = add1(rc.v(m.res_v[0]), rc.v(m.res_v[1]));
        add2({sc.e(se[0]), V(f[1]), rc.e(re[0]), a, rc.e(re[2]), V(f[0])});
        add2({sc.e(se[1]), V(f[3]), rc.e(re[3]), a, rc.e(re[1]), V(f[2])});
        add2({rc.e(re[4]), a});
        break;
      }
      case MoveKind::Saddle:
        // far = {A,B,C,D}; res_e = {B-C, D-A}
        add2({rc.e(re[0]), V(f[2]), sc.e(se[1]), V(f[3]), rc.e(re[1]), V(f[0]), sc.e(se[0]), V(f[1])});
        break;
      case MoveKind::Unzip: {
        // src_e = {g,p,q,r,s}; far = {P,Q,R,S}; res_e = {S-P, Q-R}
        int a = add1(sc.v(sv[0]), sc.v(sv[1]));
        add2({rc.e(re[0]), V(f[0]), sc.e(se[1]), a, sc.e(se[4]), V(f[3])});
        add2({rc.e(re[1]), V(f[2]), sc.e(se[3]), a, sc.e(se[2]), V(f[1])});
        add2({sc.e(se[0]), a});
        break;
      }
      case MoveKind::IH: {
        // res_v = {x',y'}; res_e = {g', x'-Q, x'-R, y'-S, y'-P}
        int t = add0();
        int sx = add1(sc.v(sv[0]), t), sy = add1(sc.v(sv[1]), t);
        int sx2 = add1(rc.v(m.res_v[0]), t), sy2 = add1(rc.v(m.res_v[1]), t);
        add2({sc.e(se[0]), sy, sx});
        add2({rc.e(re[0]), sy2, sx2});
        add2({sc.e(se[1]), V(f[0]), rc.e(re[4]), sy2, sx});
        add2({sc.e(se[2]), V(f[1]), rc.e(re[1]), sx2, sx});
        add2({sc.e(se[3]), V(f[2]), rc.e(re[2]), sx2, sy});
        add2({sc.e(se[4]), V(f[3]), rc.e(re[3]), sy2, sy});
        break;
      }
    }
  }

  CellComplex finish(WebPtr top = nullptr, SliceCells top_cells = {}) && {
    c_.top = std::move(top);
    c_.top_cells = std::move(top_cells);
    return std::move(c_);
  }

 private:
  CellComplex c_;
};

/// Facets (components of 2-cells glued across 1-cells with exactly two
/// sides), seams (1-cells with three sides) and the cell signatures from
/// which the Euler characteristic of any union of facets is read off.
struct FacetGraph {
  int num_facets = 0;
  std::vector<int> facet_of;                // per 2-cell
  std::vector<int> dots;                    // per facet
  std::vector<int> seam_cells;              // 1-cells with three sides
  std::vector<std::array<int, 3>> seams;    // facets at each seam cell
  std::vector<int> side_of;                 // per 1-cell: one incident 2-cell, or -1
  std::vector<int> boundary_cells;          // 1-cells with one side
  bool repeated_seam_facet = false;         // a facet meets itself along a seam
  // Cells grouped by the set of facets whose closure contains them; weight
  // is the signed cell count (+1 for 0- and 2-cells, -1 for 1-cells).
  std::vector<std::vector<int>> signature;
  std::vector<int> signature_weight;
  int seam_chi = 0;  // Euler characteristic of the seam subcomplex
};

inline FacetGraph facet_graph(const CellComplex& c) {
  FacetGraph g;
  int n1 = c.num1(), n2 = c.num2();
  std::vector<std::vector<int>> sides(n1);
  for (int f = 0; f < n2; ++f)
    for (int e : c.cells2[f]) sides[e].push_back(f);
  std::vector<int> parent(n2);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  g.side_of.assign(n1, -1);
  for (int e = 0; e < n1; ++e) {
    auto n = sides[e].size();
    if (n > 3) throw InvariantError("malformed foam: a 1-cell bounds " + std::to_string(n) + " sheets");
    if (n) g.side_of[e] = sides[e][0];
    if (n == 2) parent[find(sides[e][0])] = find(sides[e][1]);
    if (n == 1) g.boundary_cells.push_back(e);
  }
  std::vector<int> id(n2, -1);
  g.facet_of.assign(n2, -1);
  for (int f = 0; f < n2; ++f) {
    int r = find(f);
    if (id[r] < 0) id[r] = g.num_facets++;
    g.facet_of[f] = id[r];
  }
  g.dots.assign(g.num_facets, 0);
  for (int f = 0; f < n2; ++f) g.dots[g.facet_of[f]] += c.dots[f];

  std::vector<std::vector<int>> of1(n1), of0(c.num0);
  for (int e = 0; e < n1; ++e) {
    for (int f : sides[e]) of1[e].push_back(g.facet_of[f]);
    std::sort(of1[e].begin(), of1[e].end());
    if (sides[e].size() == 3) {
      g.seam_cells.push_back(e);
      g.seams.push_back({g.facet_of[sides[e][0]], g.facet_of[sides[e][1]], g.facet_of[sides[e][2]]});
      if (std::adjacent_find(of1[e].begin(), of1[e].end()) != of1[e].end()) g.repeated_seam_facet = true;
    }
    of1[e].erase(std::unique(of1[e].begin(), of1[e].end()), of1[e].end());
    for (int v : c.cells1[e]) of0[v].insert(of0[v].end(), of1[e].begin(), of1[e].end());
  }
  std::map<std::vector<int>, int> sig;
  for (int f = 0; f < n2; ++f) sig[{g.facet_of[f]}] += 1;
  for (int e = 0; e < n1; ++e) sig[of1[e]] -= 1;
  for (auto& s : of0) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    sig[s] += 1;
  }
  for (auto& [k, w] : sig)
    if (w != 0) {
      g.signature.push_back(k);
      g.signature_weight.push_back(w);
    }
  std::vector<char> on_seam(c.num0, 0);
  for (int e : g.seam_cells)
    for (int v : c.cells1[e]) on_seam[v] = 1;
  g.seam_chi = static_cast<int>(std::count(on_seam.begin(), on_seam.end(), 1)) -
               static_cast<int>(g.seam_cells.size());
  return g;
}

/// Euler characteristic of the closed subcomplex spanned by a set of facets.
inline int euler_char(const FacetGraph& g, const std::vector<char>& in_subset) {
  int chi = 0;
  for (std::size_t i = 0; i < g.signature.size(); ++i)
    for (int f : g.signature[i])
      if (in_subset[f]) {
        chi += g.signature_weight[i];
        break;
      }
  return chi;
}

/// 2 d(F) - 2 chi(F) - chi(s(F)), applied to the complex as built.
inline int foam_degree(const CellComplex& c, const FacetGraph& g) {
  return 2 * c.total_dots() - 2 * c.euler() - g.seam_chi;
}

inline int foam_degree(const CellComplex& c) { return foam_degree(c, facet_graph(c)); }

/// The closed complex a u_K b of two half-foams with the same boundary web:
/// b's boundary cells are identified with a's, everything else is copied.
/// Half-foams of the empty web are stored as closed complexes; they glue to
/// their disjoint union.
inline CellComplex glue_halves(const CellComplex& a, const CellComplex& b) {
  if (!a.top != !b.top || (a.top && !(*a.top == *b.top))) throw ValidationError("half-foams have different boundary webs");
  CellComplex c = a;
  c.top = nullptr;
  c.top_cells = {};
  std::vector<int> map0(b.num0, -1), map1(b.num1(), -1);
  auto identify = [](const std::vector<int>& from, const std::vector<int>& to, std::vector<int>& map) {
    for (std::size_t l = 0; l < from.size(); ++l)
      if (from[l] >= 0) map[from[l]] = to[l];
  };
  identify(b.top_cells.vertex, a.top_cells.vertex, map0);
  identify(b.top_cells.loop_aux, a.top_cells.loop_aux, map0);
  identify(b.top_cells.edge, a.top_cells.edge, map1);
  identify(b.top_cells.loop, a.top_cells.loop, map1);
  for (int& x : map0)
    if (x < 0) x = c.num0++;
  for (int e = 0; e < b.num1(); ++e)
    if (map1[e] < 0) {
      map1[e] = c.num1();
      c.cells1.push_back({map0[b.cells1[e][0]], map0[b.cells1[e][1]]});
    }
  for (int f = 0; f < b.num2(); ++f) {
    auto bd = b.cells2[f];
    for (int& e : bd) e = map1[e];
    c.cells2.push_back(std::move(bd));
    c.dots.push_back(b.dots[f]);
  }
  return c;
}

}  // namespace kmfoam
