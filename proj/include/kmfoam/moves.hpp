#pragma once

// Local replacements K -> K' on webs.
//
// Eliminations remove a disk (free loop), bigon, triangle or square face.
// The four nonreducible moves act on two edge sides of one face (zip,
// saddle) or on one edge (unzip, IH). Every move is carried out by the same
// rewiring step: drop some vertices and edges, add new vertices, and join
// the loose ends by links; chains of links and surviving edge stubs become
// the new edges (or free loops).

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kmfoam/web.hpp"

namespace kmfoam {

enum class MoveKind : std::uint8_t { Disk, Bigon, Triangle, Square, Zip, Unzip, Saddle, IH };

inline constexpr MoveKind kAllMoveKinds[] = {MoveKind::Disk,  MoveKind::Bigon,  MoveKind::Triangle,
                                             MoveKind::Square, MoveKind::Zip,   MoveKind::Unzip,
                                             MoveKind::Saddle, MoveKind::IH};

inline const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::Disk: return "disk";
    case MoveKind::Bigon: return "bigon";
    case MoveKind::Triangle: return "triangle";
    case MoveKind::Square: return "square";
    case MoveKind::Zip: return "zip";
    case MoveKind::Unzip: return "unzip";
    case MoveKind::Saddle: return "saddle";
    case MoveKind::IH: return "ih";
  }
  return "?";
}

inline std::optional<MoveKind> parse_move_kind(std::string_view s) {
  for (auto k : kAllMoveKinds)
    if (s == move_kind_name(k)) return k;
  return std::nullopt;
}

inline bool is_elimination(MoveKind k) { return k <= MoveKind::Square; }

struct MoveSite {
  MoveKind kind = MoveKind::Disk;
  EdgeSide a{};              // first face side (eliminations) or first edge side (zip, saddle)
  EdgeSide b{};              // second edge side (zip, saddle)
  Label label = 0;           // the loop (disk) or the edge (unzip, ih)
  std::uint8_t variant = 0;  // square: 0 joins the legs at sides 0 and 2 (4a), 1 at sides 1 and 3 (4b)

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
  friend auto operator<=>(const MoveSite&, const MoveSite&) = default;
};

/// What the layer builder needs to know about a move: the source cells the
/// site consumes, the surviving far-end vertices, and the cells created in
/// the result. The order of each list is fixed per kind (see apply_move).
struct MoveResult {
  Web web;
  bool generic = true;  // false: the site is degenerate and has no local cobordism
  std::vector<Label> src_v, src_e, far, res_v, res_e;
  std::optional<Label> src_loop, res_loop;
};

namespace detail {

inline std::string side_text(const Web& w, EdgeSide s) {
  return w.name(s.edge) + (s.side ? ":R" : ":L");
}

inline std::vector<int> face_orbit(const Web& w, int h) {
  std::vector<int> out;
  int g = h;
  do {
    out.push_back(g);
    g = w.face_next(g);
  } while (g != h);
  return out;
}

inline bool distinct(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

/// A face of size 2..4 whose vertices and edges are distinct and whose legs
/// are distinct edges leaving the face (the theta component, where both legs
/// of a bigon are one edge, is allowed).
inline bool generic_face(const Web& w, const std::vector<int>& sides) {
  int k = static_cast<int>(sides.size());
  std::vector<int> vs, es, legs, fars;
  for (int h : sides) {
    vs.push_back(w.vertex_of(h));
    es.push_back(Web::edge_of(h));
    int x = w.next_ccw(h);
    legs.push_back(Web::edge_of(x));
    fars.push_back(w.far_vertex(x));
  }
  if (!distinct(vs) || !distinct(es)) return false;
  for (int e : legs)
    if (std::find(es.begin(), es.end(), e) != es.end()) return false;
  if (k == 2) return true;
  if (!distinct(legs)) return false;
  for (int f : fars)
    if (std::find(vs.begin(), vs.end(), f) != vs.end()) return false;
  return true;
}

/// An edge whose endpoints are distinct and whose four neighbouring edges are
/// distinct, not loops, and do not run between the two endpoints.
inline bool generic_edge(const Web& w, int e) {
  int x = w.vertex_of(2 * e), y = w.vertex_of(2 * e + 1);
  if (x == y) return false;
  std::vector<int> stubs{w.next_ccw(2 * e), w.prev_ccw(2 * e), w.next_ccw(2 * e + 1),
                         w.prev_ccw(2 * e + 1)};
  std::vector<int> es;
  for (int h : stubs) {
    es.push_back(Web::edge_of(h));
    int f = w.far_vertex(h);
    if (f == x || f == y) return false;
  }
  return distinct(es);
}

class Rewire {
 public:
  explicit Rewire(const Web& w)
      : w_(w), drop_v_(w.num_vertices(), 0), drop_e_(w.num_edges(), 0) {}

  static int slot(int vertex, int s) { return -1 - (3 * vertex + s); }

  void drop_vertex(int v) { drop_v_[v] = 1; }
  void drop_edge(int e) { drop_e_[e] = 1; }
  void drop_loop(Label l) { drop_loops_.push_back(l); }
  int new_vertex() { return num_new_++; }
  /// Joins two loose ends: a half-edge at a dropped vertex (its edge survives
  /// as a stub), a half-edge of a dropped edge at a kept vertex, or a slot of
  /// a new vertex.
  void link(int x, int y) { links_.push_back({x, y}); }

  struct Out {
    Web web;
    std::vector<Label> new_v;
    std::vector<Label> link_label;  // edge or loop each link ended up in
    std::vector<char> link_loop;
  };

  Out run() {
    WebBuilder b(w_.names(), w_.next_label());
    std::vector<int> vmap(w_.num_vertices(), -1);
    for (int v = 0; v < w_.num_vertices(); ++v)
      if (!drop_v_[v]) vmap[v] = b.add_vertex(w_.vertex_label(v));
    Out out;
    std::vector<int> nmap;
    for (int i = 0; i < num_new_; ++i) {
      Label l = b.fresh();
      out.new_v.push_back(l);
      nmap.push_back(b.add_vertex(l));
    }
    auto kept_edge = [&](int e) {
      return !drop_e_[e] && !drop_v_[w_.vertex_of(2 * e)] && !drop_v_[w_.vertex_of(2 * e + 1)];
    };
    for (int e = 0; e < w_.num_edges(); ++e)
      if (kept_edge(e))
        b.add_edge(w_.edge_label(e), port(vmap, nmap, 2 * e), port(vmap, nmap, 2 * e + 1));

    std::map<int, int> link_at;
    for (std::size_t k = 0; k < links_.size(); ++k)
      for (int x : {links_[k].first, links_[k].second}) {
        if (x >= 0) {
          bool at_dropped = drop_v_[w_.vertex_of(x)];
          require(at_dropped != static_cast<bool>(drop_e_[Web::edge_of(x)]),
                  "rewire: link end is neither a stub nor a cut edge end");
        }
        require(link_at.emplace(x, static_cast<int>(k)).second, "rewire: loose end linked twice");
      }

    out.link_label.assign(links_.size(), 0);
    out.link_loop.assign(links_.size(), 0);
    std::vector<char> done(links_.size(), 0);
    for (std::size_t k = 0; k < links_.size(); ++k) {
      if (done[k]) continue;
      done[k] = 1;
      std::vector<int> path{static_cast<int>(k)};
      bool cycle = false;
      int ends[2];
      for (int side = 0; side < 2 && !cycle; ++side) {
        int cur = side ? links_[k].second : links_[k].first;
        while (!terminal(cur)) {
          int t = Web::twin(cur);
          if (terminal(t)) {
            cur = t;
            break;
          }
          auto it = link_at.find(t);
          require(it != link_at.end(), "rewire: dangling stub");
          if (done[it->second]) {
            cycle = true;
            break;
          }
          done[it->second] = 1;
          path.push_back(it->second);
          const auto& lk = links_[it->second];
          cur = lk.first == t ? lk.second : lk.first;
        }
        ends[side] = cur;
      }
      Label l = b.fresh();
      if (cycle) {
        b.add_loop(l);
      } else {
        b.add_edge(l, port(vmap, nmap, ends[0]), port(vmap, nmap, ends[1]));
      }
      for (int p : path) {
        out.link_label[p] = l;
        out.link_loop[p] = cycle;
      }
    }
    for (const auto& lp : w_.loops()) {
      if (std::find(drop_loops_.begin(), drop_loops_.end(), lp.label) != drop_loops_.end()) continue;
      std::optional<EdgeSide> host;
      if (lp.host) {
        auto e = w_.find_edge(lp.host->edge);
        if (e && kept_edge(*e)) host = lp.host;
      }
      b.add_loop(lp.label, host);
    }
    out.web = std::move(b).build();
    return out;
  }

 private:
  bool terminal(int x) const { return x < 0 || !drop_v_[w_.vertex_of(x)]; }

  Port port(const std::vector<int>& vmap, const std::vector<int>& nmap, int x) const {
    if (x < 0) {
      int id = -1 - x;
      return {nmap[id / 3], id % 3};
    }
    return {vmap[w_.vertex_of(x)], w_.slot_of(x)};
  }

  const Web& w_;
  std::vector<char> drop_v_, drop_e_;
  std::vector<Label> drop_loops_;
  int num_new_ = 0;
  std::vector<std::pair<int, int>> links_;
};

inline std::vector<int> site_face(const Web& w, const MoveSite& s, int size) {
  auto sides = face_orbit(w, w.half_edge_of(s.a));
  if (static_cast<int>(sides.size()) != size)
    throw ValidationError(std::string(move_kind_name(s.kind)) + " site " + side_text(w, s.a) +
                          " is not on a face of size " + std::to_string(size));
  return sides;
}

inline void check_pair_site(const Web& w, const MoveSite& s, int he, int hf) {
  if (Web::edge_of(he) == Web::edge_of(hf))
    throw ValidationError("site sides belong to the same edge");
  for (int h : {he, hf})
    if (w.vertex_of(h) == w.far_vertex(h)) throw ValidationError("site edge is a loop at a vertex");
  auto orbit = face_orbit(w, he);
  if (std::find(orbit.begin(), orbit.end(), hf) == orbit.end())
    throw ValidationError(std::string(move_kind_name(s.kind)) + " site sides " + side_text(w, s.a) +
                          ", " + side_text(w, s.b) + " do not bound a common face");
}

}  // namespace detail

inline std::string site_text(const Web& w, const MoveSite& s) {
  std::string out = move_kind_name(s.kind);
  switch (s.kind) {
    case MoveKind::Disk:
    case MoveKind::Unzip:
    case MoveKind::IH:
      return out + " " + w.name(s.label);
    case MoveKind::Zip:
    case MoveKind::Saddle:
      return out + " " + detail::side_text(w, s.a) + " " + detail::side_text(w, s.b);
    case MoveKind::Square:
      return out + " " + detail::side_text(w, s.a) + (s.variant ? " b" : " a");
    default:
      return out + " " + detail::side_text(w, s.a);
  }
}

/// Parses the text form written by site_text; names resolve against w, and
/// generated labels may be written as _n.
inline MoveSite parse_site(const Web& w, const std::string& text) {
  std::vector<std::string> tok;
  {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && text[i] == ' ') ++i;
      std::size_t j = i;
      while (j < text.size() && text[j] != ' ') ++j;
      if (j > i) tok.push_back(text.substr(i, j - i));
      i = j;
    }
  }
  auto fail = [&](const std::string& why) -> MoveSite {
    throw ValidationError("bad site '" + text + "': " + why);
  };
  if (tok.empty()) return fail("empty");
  auto kind = parse_move_kind(tok[0]);
  if (!kind) return fail("unknown move kind");
  auto label_of = [&](const std::string& n) -> Label {
    if (auto l = w.names()->find(n)) return *l;
    if (n.size() > 1 && n[0] == '_' &&
        std::all_of(n.begin() + 1, n.end(), [](char c) { return c >= '0' && c <= '9'; }))
      return static_cast<Label>(std::stol(n.substr(1)));
    fail("unknown identifier '" + n + "'");
    return 0;
  };
  auto side_of = [&](const std::string& t) -> EdgeSide {
    auto c = t.rfind(':');
    if (c == std::string::npos || c + 2 != t.size() || (t.back() != 'L' && t.back() != 'R'))
      fail("expected <edge>:<L|R>");
    return {label_of(t.substr(0, c)), static_cast<std::uint8_t>(t.back() == 'R')};
  };
  MoveSite s;
  s.kind = *kind;
  switch (s.kind) {
    case MoveKind::Disk:
    case MoveKind::Unzip:
    case MoveKind::IH:
      if (tok.size() != 2) return fail("expected one identifier");
      s.label = label_of(tok[1]);
      break;
    case MoveKind::Zip:
    case MoveKind::Saddle:
      if (tok.size() != 3) return fail("expected two edge sides");
      s.a = side_of(tok[1]);
      s.b = side_of(tok[2]);
      break;
    case MoveKind::Square:
      if (tok.size() != 3 || (tok[2] != "a" && tok[2] != "b")) return fail("expected <side> a|b");
      s.a = side_of(tok[1]);
      s.variant = tok[2] == "b";
      break;
    default:
      if (tok.size() != 2) return fail("expected one edge side");
      s.a = side_of(tok[1]);
  }
  return s;
}

/// All legal sites of one kind in canonical (label-sorted) order. Elimination
/// sites are the generic faces of the right size, each named by its
/// least edge side; zip and saddle sites are pairs of sides of distinct
/// non-loop edges on a common face; unzip and IH sites are edges with
/// distinct endpoints.
inline std::vector<MoveSite> enumerate_sites(const Web& w, MoveKind kind) {
  std::vector<MoveSite> out;
  if (kind == MoveKind::Disk) {
    for (const auto& lp : w.loops()) out.push_back({kind, {}, {}, lp.label, 0});
  } else if (kind == MoveKind::Unzip || kind == MoveKind::IH) {
    for (int e = 0; e < w.num_edges(); ++e)
      if (w.vertex_of(2 * e) != w.vertex_of(2 * e + 1)) out.push_back({kind, {}, {}, w.edge_label(e), 0});
  } else {
    std::vector<char> seen(w.num_half_edges(), 0);
    for (int h = 0; h < w.num_half_edges(); ++h) {
      if (seen[h]) continue;
      auto orbit = detail::face_orbit(w, h);
      for (int g : orbit) seen[g] = 1;
      int size = static_cast<int>(orbit.size());
      if (kind == MoveKind::Zip || kind == MoveKind::Saddle) {
        std::vector<EdgeSide> sides;
        for (int g : orbit)
          if (w.vertex_of(g) != w.far_vertex(g)) sides.push_back(w.side_of(g));
        std::sort(sides.begin(), sides.end());
        for (std::size_t i = 0; i < sides.size(); ++i)
          for (std::size_t j = i + 1; j < sides.size(); ++j)
            if (sides[i].edge != sides[j].edge) out.push_back({kind, sides[i], sides[j], 0, 0});
        continue;
      }
      int want = kind == MoveKind::Bigon ? 2 : kind == MoveKind::Triangle ? 3 : 4;
      if (size != want) continue;
      int start = *std::min_element(orbit.begin(), orbit.end(), [&](int x, int y) {
        return w.side_of(x) < w.side_of(y);
      });
      auto sides = detail::face_orbit(w, start);
      if (detail::generic_face(w, sides)) out.push_back({kind, w.side_of(start), {}, 0, 0});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Applies one move. For squares the site's variant selects K'_4a or K'_4b.
///
/// Result bookkeeping per kind (face sides s_t run from w_t to w_{t+1}, leg
/// x_t leaves w_t towards the far vertex f_t):
///   disk:     src_loop
///   bigon:    src_v {w0,w1}, src_e {s0,s1,x0,x1}, far {f0,f1}, res_e {m} or res_loop
///   triangle: src_v {w0..w2}, src_e {s0..s2,x0..x2}, far {f0..f2}, res_v {z}, res_e {z-f0,z-f1,z-f2}
///   square:   src_v {w0..w3}, src_e {s0..s3,x0..x3}, far {f0..f3}, res_e {the two joins}
///   zip:      src_e {e,f}, far {A,B,C,D}, res_v {x,y}, res_e {B-x, x-C, y-A, D-y, x-y}
///   saddle:   src_e {e,f}, far {A,B,C,D}, res_e {B-C, D-A}
///   unzip:    src_v {x,y}, src_e {g,p,q,r,s}, far {P,Q,R,S}, res_e {S-P, Q-R}
///   ih:       src_v {x,y}, src_e {g,p,q,r,s}, far {P,Q,R,S}, res_v {x',y'},
///             res_e {x'-y', x'-Q, x'-R, y'-S, y'-P}
/// where e runs A->B and f runs C->D along the face, and x has neighbours
/// (g,p,q), y has (g,r,s) in counterclockwise order.
inline MoveResult apply_move(const Web& w, const MoveSite& s) {
  MoveResult r;
  detail::Rewire rw(w);
  auto vl = [&](int v) { return w.vertex_label(v); };
  auto el = [&](int h) { return w.edge_label(Web::edge_of(h)); };
  using detail::Rewire;
  switch (s.kind) {
    case MoveKind::Disk: {
      if (!w.find_loop(s.label)) throw ValidationError("disk site refers to a missing loop");
      rw.drop_loop(s.label);
      r.src_loop = s.label;
      r.web = rw.run().web;
      return r;
    }
    case MoveKind::Bigon:
    case MoveKind::Triangle:
    case MoveKind::Square: {
      int k = s.kind == MoveKind::Bigon ? 2 : s.kind == MoveKind::Triangle ? 3 : 4;
      auto sides = detail::site_face(w, s, k);
      if (!detail::generic_face(w, sides))
        throw ValidationError(std::string(move_kind_name(s.kind)) + " site " +
                              detail::side_text(w, s.a) + " is not a simple face");
      std::vector<int> legs;
      for (int h : sides) {
        rw.drop_vertex(w.vertex_of(h));
        rw.drop_edge(Web::edge_of(h));
        legs.push_back(w.next_ccw(h));
        r.src_v.push_back(vl(w.vertex_of(h)));
        r.src_e.push_back(el(h));
      }
      for (int x : legs) r.src_e.push_back(el(x));
      bool theta = k == 2 && Web::edge_of(legs[0]) == Web::edge_of(legs[1]);
      if (!theta)
        for (int x : legs) r.far.push_back(vl(w.far_vertex(x)));
      if (k == 2) {
        rw.link(legs[0], legs[1]);
        auto o = rw.run();
        if (o.link_loop[0])
          r.res_loop = o.link_label[0];
        else
          r.res_e = {o.link_label[0]};
        r.web = std::move(o.web);
      } else if (k == 3) {
        // The sides run clockwise around the face, so the legs appear at the
        // contracted vertex in the order x0, x2, x1.
        int z = rw.new_vertex();
        rw.link(Rewire::slot(z, 0), legs[0]);
        rw.link(Rewire::slot(z, 1), legs[2]);
        rw.link(Rewire::slot(z, 2), legs[1]);
        auto o = rw.run();
        r.res_v = o.new_v;
        r.res_e = {o.link_label[0], o.link_label[2], o.link_label[1]};
        r.web = std::move(o.web);
      } else {
        int t = s.variant ? 1 : 0;
        rw.link(legs[t], legs[t + 1]);
        rw.link(legs[t + 2], legs[(t + 3) % 4]);
        auto o = rw.run();
        r.res_e = {o.link_label[0], o.link_label[1]};
        r.web = std::move(o.web);
      }
      return r;
    }
    case MoveKind::Zip:
    case MoveKind::Saddle: {
      int he = w.half_edge_of(s.a), hf = w.half_edge_of(s.b);
      detail::check_pair_site(w, s, he, hf);
      rw.drop_edge(Web::edge_of(he));
      rw.drop_edge(Web::edge_of(hf));
      r.src_e = {el(he), el(hf)};
      r.far = {vl(w.vertex_of(he)), vl(w.far_vertex(he)), vl(w.vertex_of(hf)), vl(w.far_vertex(hf))};
      int A = he, B = Web::twin(he), C = hf, D = Web::twin(hf);
      if (s.kind == MoveKind::Saddle) {
        rw.link(B, C);
        rw.link(D, A);
        auto o = rw.run();
        r.res_e = {o.link_label[0], o.link_label[1]};
        r.web = std::move(o.web);
      } else {
        int x = rw.new_vertex(), y = rw.new_vertex();
        // x sits between the B and C ends with rotation (g, C, B); y between
        // the D and A ends with rotation (g, A, D).
        rw.link(Rewire::slot(x, 2), B);
        rw.link(Rewire::slot(x, 1), C);
        rw.link(Rewire::slot(y, 1), A);
        rw.link(Rewire::slot(y, 2), D);
        rw.link(Rewire::slot(x, 0), Rewire::slot(y, 0));
        auto o = rw.run();
        r.res_v = o.new_v;
        r.res_e = o.link_label;
        r.web = std::move(o.web);
      }
      return r;
    }
    case MoveKind::Unzip:
    case MoveKind::IH: {
      auto e = w.find_edge(s.label);
      if (!e) throw ValidationError("site refers to a missing edge " + w.name(s.label));
      int gx = 2 * *e, gy = 2 * *e + 1;
      int x = w.vertex_of(gx), y = w.vertex_of(gy);
      if (x == y) throw ValidationError("site edge is a loop at a vertex");
      r.generic = detail::generic_edge(w, *e);
      int p = w.next_ccw(gx), q = w.prev_ccw(gx), rr = w.next_ccw(gy), ss = w.prev_ccw(gy);
      rw.drop_vertex(x);
      rw.drop_vertex(y);
      rw.drop_edge(*e);
      r.src_v = {vl(x), vl(y)};
      r.src_e = {s.label, el(p), el(q), el(rr), el(ss)};
      for (int h : {p, q, rr, ss}) r.far.push_back(vl(w.far_vertex(h)));
      if (s.kind == MoveKind::Unzip) {
        rw.link(ss, p);
        rw.link(q, rr);
        auto o = rw.run();
        r.res_e = o.link_label;
        r.web = std::move(o.web);
      } else {
        int x2 = rw.new_vertex(), y2 = rw.new_vertex();
        rw.link(Rewire::slot(x2, 0), Rewire::slot(y2, 0));
        rw.link(Rewire::slot(x2, 1), q);
        rw.link(Rewire::slot(x2, 2), rr);
        rw.link(Rewire::slot(y2, 1), ss);
        rw.link(Rewire::slot(y2, 2), p);
        auto o = rw.run();
        r.res_v = o.new_v;
        r.res_e = o.link_label;
        r.web = std::move(o.web);
      }
      if (!r.generic) r.far.clear();
      return r;
    }
  }
  throw InvariantError("unknown move kind");
}

/// Both results of a square elimination (4a, 4b).
inline std::pair<MoveResult, MoveResult> apply_square(const Web& w, MoveSite s) {
  s.variant = 0;
  auto a = apply_move(w, s);
  s.variant = 1;
  return {std::move(a), apply_move(w, s)};
}

}  // namespace kmfoam
