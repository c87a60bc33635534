#pragma once

// Webs: planar trivalent graphs stored as combinatorial maps.
//
// Half-edge h belongs to edge h / 2; its twin (the edge pairing) is h ^ 1.
// Every vertex lists its three half-edges in counterclockwise order. Faces
// are the orbits of face_next = rotation after twin, which walks a face
// boundary with the face on the right-hand side.

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "kmfoam/error.hpp"

namespace kmfoam {

using Label = std::int32_t;

/// One side of an edge: side 0 (L) is the face of half-edge 2e, side 1 (R)
/// the face of half-edge 2e + 1.
struct EdgeSide {
  Label edge = 0;
  std::uint8_t side = 0;

  friend bool operator==(const EdgeSide&, const EdgeSide&) = default;
  friend auto operator<=>(const EdgeSide&, const EdgeSide&) = default;
};

struct FreeLoop {
  Label label = 0;
  std::optional<EdgeSide> host;  // nullopt: the outer region of an edgeless web

  friend bool operator==(const FreeLoop&, const FreeLoop&) = default;
};

/// Display names for labels read from files; generated labels print as _n.
class NameTable {
 public:
  Label intern(const std::string& name) {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it != names_.end()) return static_cast<Label>(it - names_.begin());
    names_.push_back(name);
    return static_cast<Label>(names_.size() - 1);
  }
  std::optional<Label> find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<Label>(it - names_.begin());
  }
  std::string name(Label l) const {
    if (l >= 0 && static_cast<std::size_t>(l) < names_.size()) return names_[l];
    return "_" + std::to_string(l);
  }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
};

class WebBuilder;

class Web {
 public:
  Web() : names_(std::make_shared<NameTable>()) {}

  int num_vertices() const { return static_cast<int>(rotation_.size()); }
  int num_edges() const { return static_cast<int>(edge_label_.size()); }
  int num_half_edges() const { return 2 * num_edges(); }
  int num_loops() const { return static_cast<int>(loops_.size()); }
  bool empty() const { return num_vertices() == 0 && num_loops() == 0; }

  static int twin(int h) { return h ^ 1; }
  static int edge_of(int h) { return h >> 1; }
  int vertex_of(int h) const { return he_vertex_[h]; }
  int slot_of(int h) const { return he_slot_[h]; }
  int next_ccw(int h) const { return rotation_[he_vertex_[h]][(he_slot_[h] + 1) % 3]; }
  int prev_ccw(int h) const { return rotation_[he_vertex_[h]][(he_slot_[h] + 2) % 3]; }
  int face_next(int h) const { return next_ccw(twin(h)); }
  /// Endpoint of half-edge h's edge at the far end.
  int far_vertex(int h) const { return he_vertex_[twin(h)]; }

  const std::array<int, 3>& rotation(int v) const { return rotation_[v]; }
  Label vertex_label(int v) const { return vertex_label_[v]; }
  Label edge_label(int e) const { return edge_label_[e]; }
  const std::vector<FreeLoop>& loops() const { return loops_; }
  const std::vector<Label>& edge_labels() const { return edge_label_; }
  const std::vector<Label>& vertex_labels() const { return vertex_label_; }

  std::optional<int> find_edge(Label l) const { return find_in(edge_index_, l); }
  std::optional<int> find_vertex(Label l) const { return find_in(vertex_index_, l); }
  std::optional<int> find_loop(Label l) const {
    for (int i = 0; i < num_loops(); ++i)
      if (loops_[i].label == l) return i;
    return std::nullopt;
  }
  int half_edge_of(EdgeSide s) const {
    auto e = find_edge(s.edge);
    if (!e) throw ValidationError("unknown edge " + name(s.edge));
    return 2 * *e + s.side;
  }
  EdgeSide side_of(int h) const { return {edge_label_[edge_of(h)], static_cast<std::uint8_t>(h & 1)}; }

  Label next_label() const { return next_label_; }
  std::string name(Label l) const { return names_->name(l); }
  const std::shared_ptr<const NameTable>& names() const { return names_; }

  friend bool operator==(const Web& a, const Web& b) {
    return a.rotation_ == b.rotation_ && a.he_vertex_ == b.he_vertex_ &&
           a.vertex_label_ == b.vertex_label_ && a.edge_label_ == b.edge_label_ &&
           a.loops_ == b.loops_;
  }

 private:
  friend class WebBuilder;

  static std::optional<int> find_in(const std::vector<std::pair<Label, int>>& idx, Label l) {
    auto it = std::lower_bound(idx.begin(), idx.end(), std::pair<Label, int>{l, -1});
    if (it == idx.end() || it->first != l) return std::nullopt;
    return it->second;
  }

  std::vector<std::array<int, 3>> rotation_;
  std::vector<int> he_vertex_;
  std::vector<int> he_slot_;
  std::vector<Label> vertex_label_;
  std::vector<Label> edge_label_;
  std::vector<FreeLoop> loops_;
  std::vector<std::pair<Label, int>> edge_index_;
  std::vector<std::pair<Label, int>> vertex_index_;
  Label next_label_ = 0;
  std::shared_ptr<const NameTable> names_;
};

using WebPtr = std::shared_ptr<const Web>;

struct Port {
  int vertex = -1;
  int slot = -1;
};

class WebBuilder {
 public:
  explicit WebBuilder(std::shared_ptr<const NameTable> names = nullptr, Label next_label = 0)
      : names_(names ? std::move(names) : std::make_shared<NameTable>()), next_label_(next_label) {}

  Label fresh() { return next_label_++; }

  int add_vertex(Label l) {
    bump(l);
    labels_v_.push_back(l);
    slots_.push_back({-1, -1, -1});
    return static_cast<int>(labels_v_.size()) - 1;
  }

  /// Joins two vertex slots by a new edge; the first port receives half-edge 2e.
  int add_edge(Label l, Port a, Port b) {
    bump(l);
    int e = static_cast<int>(labels_e_.size());
    labels_e_.push_back(l);
    attach(a, 2 * e);
    attach(b, 2 * e + 1);
    return e;
  }

  void add_loop(Label l, std::optional<EdgeSide> host = std::nullopt) {
    bump(l);
    loops_.push_back({l, host});
  }

  Web build(bool check_sphere = true) && {
    Web w;
    w.names_ = names_;
    w.next_label_ = next_label_;
    w.vertex_label_ = std::move(labels_v_);
    w.edge_label_ = std::move(labels_e_);
    w.loops_ = std::move(loops_);
    int nh = 2 * static_cast<int>(w.edge_label_.size());
    w.he_vertex_.assign(nh, -1);
    w.he_slot_.assign(nh, -1);
    w.rotation_.resize(slots_.size());
    for (std::size_t v = 0; v < slots_.size(); ++v) {
      for (int s = 0; s < 3; ++s) {
        int h = slots_[v][s];
        if (h < 0)
          throw ValidationError("vertex " + w.names_->name(w.vertex_label_[v]) +
                                " does not have valence 3");
        w.rotation_[v][s] = h;
        w.he_vertex_[h] = static_cast<int>(v);
        w.he_slot_[h] = s;
      }
    }
    for (int h = 0; h < nh; ++h)
      if (w.he_vertex_[h] < 0)
        throw ValidationError("edge " + w.names_->name(w.edge_label_[h / 2]) +
                              " has a dangling half-edge");
    index(w);
    for (const auto& lp : w.loops_)
      if (lp.host && !w.find_edge(lp.host->edge))
        throw ValidationError("loop " + w.names_->name(lp.label) + " is hosted by unknown edge");
    if (check_sphere) check_euler(w);
    return w;
  }

 private:
  void bump(Label l) { next_label_ = std::max(next_label_, l + 1); }

  void attach(Port p, int h) {
    if (p.vertex < 0 || p.vertex >= static_cast<int>(slots_.size()) || p.slot < 0 || p.slot > 2)
      throw ValidationError("edge attached to a missing vertex slot");
    if (slots_[p.vertex][p.slot] >= 0)
      throw ValidationError("vertex " + names_->name(labels_v_[p.vertex]) +
                            " has a half-edge listed twice");
    slots_[p.vertex][p.slot] = h;
  }

  static void index(Web& w) {
    w.edge_index_.clear();
    w.vertex_index_.clear();
    for (int e = 0; e < w.num_edges(); ++e) w.edge_index_.push_back({w.edge_label_[e], e});
    for (int v = 0; v < w.num_vertices(); ++v) w.vertex_index_.push_back({w.vertex_label_[v], v});
    std::sort(w.edge_index_.begin(), w.edge_index_.end());
    std::sort(w.vertex_index_.begin(), w.vertex_index_.end());
    auto dup = [](const auto& idx) {
      return std::adjacent_find(idx.begin(), idx.end(), [](auto& a, auto& b) {
               return a.first == b.first;
             }) != idx.end();
    };
    if (dup(w.edge_index_) || dup(w.vertex_index_))
      throw ValidationError("duplicate vertex or edge identifier");
  }

  // V - E + F = 2 on every connected component.
  static void check_euler(const Web& w) {
    int nv = w.num_vertices();
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int e = 0; e < w.num_edges(); ++e)
      parent[find(w.vertex_of(2 * e))] = find(w.vertex_of(2 * e + 1));
    std::vector<long> chi(nv, 0);
    for (int v = 0; v < nv; ++v) chi[find(v)] += 1;
    for (int e = 0; e < w.num_edges(); ++e) chi[find(w.vertex_of(2 * e))] -= 1;
    std::vector<char> seen(w.num_half_edges(), 0);
    for (int h = 0; h < w.num_half_edges(); ++h) {
      if (seen[h]) continue;
      for (int g = h; !seen[g]; g = w.face_next(g)) seen[g] = 1;
      chi[find(w.vertex_of(h))] += 1;
    }
    for (int v = 0; v < nv; ++v)
      if (find(v) == v && chi[v] != 2)
        throw ValidationError("embedding is not spherical (a component has V - E + F = " +
                              std::to_string(chi[v]) + ")");
  }

  std::shared_ptr<const NameTable> names_;
  Label next_label_;
  std::vector<Label> labels_v_;
  std::vector<Label> labels_e_;
  std::vector<std::array<int, 3>> slots_;
  std::vector<FreeLoop> loops_;
};

/// A face of the map: either a boundary orbit of half-edges (face on the
/// right of each) or the disk bounded by a free loop.
struct Face {
  std::vector<int> sides;        // half-edges in traversal order
  std::optional<int> loop_disk;  // loop index when this is a loop's inner disk
  std::vector<int> hosted_loops; // loops drawn inside this face

  int size() const { return loop_disk ? 1 : static_cast<int>(sides.size()); }
};

inline std::vector<Face> faces(const Web& w) {
  std::vector<Face> out;
  std::vector<int> face_of(w.num_half_edges(), -1);
  for (int h = 0; h < w.num_half_edges(); ++h) {
    if (face_of[h] >= 0) continue;
    Face f;
    for (int g = h; face_of[g] < 0; g = w.face_next(g)) {
      face_of[g] = static_cast<int>(out.size());
      f.sides.push_back(g);
    }
    out.push_back(std::move(f));
  }
  int outer = -1;
  for (int i = 0; i < w.num_loops(); ++i) {
    const auto& lp = w.loops()[i];
    if (lp.host) {
      out[face_of[w.half_edge_of(*lp.host)]].hosted_loops.push_back(i);
    } else {
      // Unannotated loops live in the first face (or the whole sphere).
      if (outer < 0) {
        if (out.empty()) out.push_back(Face{});
        outer = 0;
      }
      out[outer].hosted_loops.push_back(i);
    }
  }
  for (int i = 0; i < w.num_loops(); ++i) {
    Face f;
    f.loop_disk = i;
    out.push_back(std::move(f));
  }
  return out;
}

/// Face index of every half-edge, consistent with the orbit order used by faces().
inline std::vector<int> face_index(const Web& w) {
  std::vector<int> face_of(w.num_half_edges(), -1);
  int next = 0;
  for (int h = 0; h < w.num_half_edges(); ++h) {
    if (face_of[h] >= 0) continue;
    for (int g = h; face_of[g] < 0; g = w.face_next(g)) face_of[g] = next;
    ++next;
  }
  return face_of;
}

}  // namespace kmfoam
