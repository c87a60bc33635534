#pragma once

#include <string>

#include "kmfoam/web_io.hpp"

inline std::string data_path(const std::string& name) { return std::string(KMFOAM_DATA_DIR) + "/webs/" + name; }

inline kmfoam::Web bundled(const std::string& name) { return kmfoam::load_web(data_path(name + ".web")); }

#include <random>

#include "kmfoam/moves.hpp"

/// Random planar web: starting from the theta web, repeatedly join two sides
/// of a random face by a new edge, then flip a few random generic edges.
inline kmfoam::Web random_web(unsigned seed, int min_vertices, int flips = 3) {
  using namespace kmfoam;
  std::mt19937 rng(seed);
  Web w = parse_web("vertex u: a0 b0 c0\nvertex v: a1 c1 b1\nedge a: a0 a1\nedge b: b0 b1\nedge c: c0 c1\n");
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  while (w.num_vertices() < min_vertices) {
    int h = pick(w.num_half_edges());
    auto orbit = detail::face_orbit(w, h);
    int hf = orbit[pick(static_cast<int>(orbit.size()))];
    if (Web::edge_of(hf) == Web::edge_of(h)) continue;
    // new vertex x on the side h (A->B), y on the side hf (C->D), joined
    // through the face: x = (A, g, B), y = (C, g, D)
    detail::Rewire rw(w);
    rw.drop_edge(Web::edge_of(h));
    rw.drop_edge(Web::edge_of(hf));
    int x = rw.new_vertex(), y = rw.new_vertex();
    rw.link(detail::Rewire::slot(x, 0), h);
    rw.link(detail::Rewire::slot(x, 2), Web::twin(h));
    rw.link(detail::Rewire::slot(y, 0), hf);
    rw.link(detail::Rewire::slot(y, 2), Web::twin(hf));
    rw.link(detail::Rewire::slot(x, 1), detail::Rewire::slot(y, 1));
    w = rw.run().web;
  }
  for (int i = 0; i < flips; ++i) {
    int e = pick(w.num_edges());
    if (!detail::generic_edge(w, e)) continue;
    w = apply_move(w, {MoveKind::IH, {}, {}, w.edge_label(e), 0}).web;
  }
  return w;
}
