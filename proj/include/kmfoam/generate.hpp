#pragma once

// Half-foam sets with a given top boundary web K:
//   - bases of reducible webs, rebuilt along a reduction tree;
//   - spanning sets of nonreducible webs: one nonreducible move K -> K' to
//     a reducible K', then the basis of K' capped by the move's cobordism;
//   - the face 4-coloring half-foams (T x {0}) u (K x [0,1]).

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kmfoam/movie.hpp"
#include "kmfoam/reduce.hpp"

namespace kmfoam {

/// A half-foam given by the faces colored 4 in a face 4-coloring of K, with
/// dots on some of its 2-cells (rectangles over the edges in edge order, then
/// the bottom disks in face order).
struct ColoringFoam {
  std::vector<int> four_faces;  // indices into faces(K)
  std::vector<int> dot_cells;   // one entry per dot
};

struct HalfFoam {
  Movie movie;                          // empty for coloring half-foams
  std::optional<ColoringFoam> coloring;
  WebPtr web;                           // top boundary
  int degree = 0;
  std::string provenance;
};

inline CellComplex coloring_complex(const Web& k, const ColoringFoam& c) {
  if (k.num_loops()) throw ValidationError("coloring half-foams need a web without free loops");
  ComplexBuilder b;
  SliceCells bottom = b.add_slice(k);
  SliceCells top = b.add_slice(k);
  std::vector<int> vert(k.num_vertices());
  for (int v = 0; v < k.num_vertices(); ++v) vert[v] = b.add1(bottom.v(k.vertex_label(v)), top.v(k.vertex_label(v)));
  for (int e = 0; e < k.num_edges(); ++e) {
    Label l = k.edge_label(e);
    b.add2({bottom.e(l), vert[k.vertex_of(2 * e + 1)], top.e(l), vert[k.vertex_of(2 * e)]});
  }
  auto fs = faces(k);
  for (std::size_t f = 0; f < fs.size(); ++f) {
    if (std::find(c.four_faces.begin(), c.four_faces.end(), static_cast<int>(f)) != c.four_faces.end()) continue;
    std::vector<int> bd;
    for (int h : fs[f].sides) bd.push_back(bottom.e(k.edge_label(Web::edge_of(h))));
    b.add2(std::move(bd));
  }
  auto out = std::move(b).finish(std::make_shared<const Web>(k), std::move(top));
  for (int cell : c.dot_cells) {
    if (cell < 0 || cell >= out.num2()) throw ValidationError("dot on a cell the coloring half-foam does not have");
    ++out.dots[cell];
  }
  return out;
}

inline CellComplex build_complex(const HalfFoam& f) {
  if (f.coloring) return coloring_complex(*f.web, *f.coloring);
  return build_complex(f.movie);
}

/// Text identifying a half-foam: the movie, or the web and color-4 faces.
inline std::string serialize(const HalfFoam& f) {
  if (!f.coloring) return write_movie(f.movie);
  auto list = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s.empty() ? std::string("-") : s;
  };
  return "coloring faces=" + list(f.coloring->four_faces) + " dots=" + list(f.coloring->dot_cells) +
         "\nslice inline\n" + write_web(*f.web) + "end\n";
}

namespace detail {

inline void basis_movies(const ReductionNode& node, std::vector<Movie>& out) {
  if (node.leaf()) {
    Movie m;
    m.slices = {node.web};
    out.push_back(std::move(m));
    return;
  }
  int dmax = max_dots(node.site.kind);
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    std::vector<Movie> child;
    basis_movies(*node.children[i], child);
    Event e{node.site, 0, false};
    e.site.variant = static_cast<std::uint8_t>(i);
    for (const auto& c : child)
      for (int d = 0; d <= dmax; ++d) {
        e.dots = d;
        Movie m = c;
        m.push(e, node.moves[i], node.web);
        out.push_back(std::move(m));
      }
  }
}

}  // namespace detail

/// Basis of a reducible web rebuilt from its reduction tree. The empty web
/// gets the single empty half-foam.
inline std::vector<HalfFoam> reducible_basis(const ReductionTree& tree) {
  std::vector<Movie> movies;
  detail::basis_movies(*tree, movies);
  std::vector<HalfFoam> out;
  out.reserve(movies.size());
  for (std::size_t i = 0; i < movies.size(); ++i) {
    HalfFoam f;
    f.degree = movies[i].degree();
    f.web = tree->web;
    f.provenance = "basis #" + std::to_string(i);
    f.movie = std::move(movies[i]);
    out.push_back(std::move(f));
  }
  return out;
}

inline constexpr MoveKind kSpanningKinds[] = {MoveKind::Zip, MoveKind::Unzip, MoveKind::Saddle, MoveKind::IH};

/// The sites that feed a spanning set, in output order, with the size of the
/// basis each contributes. Foams are produced on demand.
class GeneratingSet {
 public:
  struct Entry {
    MoveSite site;
    std::shared_ptr<const MoveResult> move;
    ReductionTree tree;
  };

  GeneratingSet(WebPtr k, const std::vector<MoveKind>& kinds, Reducer& reducer) : web_(std::move(k)) {
    auto own = reducer.reduce(web_);
    if (own.ok()) {
      tree_ = own.tree;
      total_ = tree_->basis_size;
      return;
    }
    for (MoveKind kind : kSpanningKinds) {
      if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) continue;
      for (const auto& s : enumerate_sites(*web_, kind)) {
        auto mr = std::make_shared<const MoveResult>(apply_move(*web_, s));
        if (!mr->generic) continue;
        auto r = reducer.reduce(child_web(mr));
        if (!r.ok()) continue;
        total_ += r.tree->basis_size;
        entries_.push_back({s, mr, r.tree});
      }
    }
  }

  bool reducible() const { return static_cast<bool>(tree_); }
  std::uint64_t size() const { return total_; }
  const std::vector<Entry>& entries() const { return entries_; }
  const WebPtr& web() const { return web_; }

  /// The first `limit` half-foams.
  std::vector<HalfFoam> take(std::uint64_t limit) const {
    if (tree_) {
      auto all = reducible_basis(tree_);
      if (all.size() > limit) all.resize(limit);
      return all;
    }
    std::vector<HalfFoam> out;
    for (const auto& en : entries_) {
      if (out.size() >= limit) break;
      auto child = reducible_basis(en.tree);
      Event e{en.site, 0, false};
      for (std::size_t i = 0; i < child.size() && out.size() < limit; ++i) {
        HalfFoam f;
        f.movie = std::move(child[i].movie);
        f.movie.push(e, en.move, web_);
        f.web = web_;
        f.degree = f.movie.degree();
        f.provenance = site_text(*web_, en.site) + " #" + std::to_string(i);
        out.push_back(std::move(f));
      }
    }
    return out;
  }

 private:
  WebPtr web_;
  ReductionTree tree_;
  std::vector<Entry> entries_;
  std::uint64_t total_ = 0;
};

inline std::vector<HalfFoam> generating_set(const Web& k, std::uint64_t limit = UINT64_MAX,
                                            const std::vector<MoveKind>& kinds = {std::begin(kSpanningKinds),
                                                                                  std::end(kSpanningKinds)}) {
  Reducer r;
  return GeneratingSet(std::make_shared<const Web>(k), kinds, r).take(limit);
}

struct ColoringHalfFoams {
  std::uint64_t colorings = 0;  // proper face 4-colorings found
  std::vector<HalfFoam> foams;  // one undotted half-foam per set of color-4 faces
};

/// Enumerates proper 4-colorings of the faces of k. Colorings with the same
/// set of color-4 faces give the same half-foam and are collapsed.
inline ColoringHalfFoams coloring_halffoams(const Web& k) {
  auto fs = faces(k);
  if (k.num_loops()) throw ValidationError("coloring half-foams need a web without free loops");
  auto fi = face_index(k);
  int nf = static_cast<int>(fs.size());
  std::vector<std::set<int>> adj(nf);
  for (int e = 0; e < k.num_edges(); ++e) {
    int a = fi[2 * e], b = fi[2 * e + 1];
    if (a == b) throw ValidationError("web has a bridge: no face 4-coloring exists");
    adj[a].insert(b);
    adj[b].insert(a);
  }
  ColoringHalfFoams out;
  std::vector<int> color(nf, -1);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> order_found;
  std::function<void(int)> rec = [&](int f) {
    if (f == nf) {
      ++out.colorings;
      std::vector<int> four;
      for (int g = 0; g < nf; ++g)
        if (color[g] == 3) four.push_back(g);
      if (seen.insert(four).second) order_found.push_back(four);
      return;
    }
    for (int c = 0; c < 4; ++c) {
      bool ok = true;
      for (int g : adj[f])
        if (color[g] == c) ok = false;
      if (!ok) continue;
      color[f] = c;
      rec(f + 1);
      color[f] = -1;
    }
  };
  rec(0);
  if (out.colorings == 0) throw ValidationError("no face 4-coloring found for a bridgeless planar web");
  auto web = std::make_shared<const Web>(k);
  for (std::size_t i = 0; i < order_found.size(); ++i) {
    HalfFoam f;
    f.web = web;
    f.coloring = ColoringFoam{order_found[i], {}};
    f.degree = foam_degree(build_complex(f));
    f.provenance = "coloring #" + std::to_string(i);
    out.foams.push_back(std::move(f));
  }
  return out;
}

}  // namespace kmfoam
