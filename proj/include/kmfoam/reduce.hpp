#pragma once

// Greedy reduction of webs to the empty web: eliminate disks, bigons,
// triangles and squares in that order, always at the first site in canonical
// order, without backtracking.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kmfoam/canonical.hpp"
#include "kmfoam/moves.hpp"

namespace kmfoam {

struct ReductionNode {
  WebPtr web;
  MoveSite site;  // unused at leaves (empty web)
  // One child per move result; squares have two (4a, 4b).
  std::vector<std::shared_ptr<const MoveResult>> moves;
  std::vector<std::shared_ptr<const ReductionNode>> children;
  std::uint64_t basis_size = 1;

  bool leaf() const { return children.empty(); }
};

using ReductionTree = std::shared_ptr<const ReductionNode>;

struct ReduceOutcome {
  ReductionTree tree;   // set on success
  WebPtr stuck;         // on failure: a web with no eliminable face
  bool ok() const { return static_cast<bool>(tree); }
};

/// Per-kind growth of the basis when rebuilding a parent from its child.
inline std::uint64_t basis_factor(MoveKind k) {
  return k == MoveKind::Disk ? 3 : k == MoveKind::Bigon ? 2 : 1;
}

inline WebPtr child_web(const std::shared_ptr<const MoveResult>& m) {
  return WebPtr(m, &m->web);
}

class Reducer {
 public:
  ReduceOutcome reduce(const WebPtr& w) {
    auto code = canonical_code(*w);
    {
      std::lock_guard lock(mu_);
      auto it = failures_.find(code);
      if (it != failures_.end()) return {nullptr, it->second};
    }
    ReduceOutcome out;
    out.tree = build(w, out.stuck);
    if (!out.tree) {
      std::lock_guard lock(mu_);
      failures_.emplace(code, out.stuck);
    }
    return out;
  }

  ReduceOutcome reduce(const Web& w) { return reduce(std::make_shared<const Web>(w)); }

 private:
  static ReductionTree build(const WebPtr& w, WebPtr& stuck) {
    auto node = std::make_shared<ReductionNode>();
    node->web = w;
    if (w->empty()) return node;
    for (MoveKind k : {MoveKind::Disk, MoveKind::Bigon, MoveKind::Triangle, MoveKind::Square}) {
      auto sites = enumerate_sites(*w, k);
      if (sites.empty()) continue;
      node->site = sites.front();
      if (k == MoveKind::Square) {
        auto [a, b] = apply_square(*w, node->site);
        node->moves = {std::make_shared<const MoveResult>(std::move(a)),
                       std::make_shared<const MoveResult>(std::move(b))};
      } else {
        node->moves = {std::make_shared<const MoveResult>(apply_move(*w, node->site))};
      }
      node->basis_size = 0;
      for (const auto& m : node->moves) {
        auto child = build(child_web(m), stuck);
        if (!child) return nullptr;
        node->basis_size += basis_factor(k) * child->basis_size;
        node->children.push_back(std::move(child));
      }
      return node;
    }
    stuck = w;
    return nullptr;
  }

  std::mutex mu_;
  std::unordered_map<std::string, WebPtr> failures_;
};

inline ReduceOutcome reduce(const Web& w) {
  Reducer r;
  return r.reduce(w);
}

}  // namespace kmfoam
