#pragma once

// Lower bounds for one web: generate half-foams, fill the Gram matrix row by
// row (cached, in parallel), track the F2 rank of its leading blocks, then
// take the graded Smith form of the phi-Gram matrix.

#include <atomic>
#include <chrono>
#include <filesystem>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "kmfoam/cache.hpp"
#include "kmfoam/coloring.hpp"
#include "kmfoam/evaluate.hpp"
#include "kmfoam/generate.hpp"
#include "kmfoam/rank.hpp"
#include "kmfoam/smith.hpp"
#include "kmfoam/tait.hpp"

namespace kmfoam {

struct BoundsConfig {
  std::uint64_t budget = 1000;
  std::vector<MoveKind> kinds{std::begin(kSpanningKinds), std::end(kSpanningKinds)};
  bool coloring = false;  // use the dotted face 4-coloring half-foams instead
  unsigned workers = 1;
  std::optional<std::filesystem::path> cache_dir;
  bool self_check = false;
  std::size_t self_check_pairs = 40;
};

struct BoundsReport {
  std::string web;
  std::uint64_t tait = 0;
  bool reducible = false;
  std::string filter;
  std::uint64_t n_total = 0;  // size of the whole half-foam set
  std::uint64_t n_used = 0;   // foams used (budget cap)
  std::uint64_t n_sat = 0;    // first n with l_n = l
  std::size_t l = 0, r = 0;
  QPoly lq, rq;
  std::vector<std::size_t> history;  // l_1, ..., l_n
  QuantumDiagnostics lq_diag, rq_diag;
  std::size_t evaluations = 0;       // Gram entries computed (not cached)
  std::size_t cache_hits = 0;
  std::size_t self_checked = 0;
};

/// Runs fn(i) for i in [0, n) on up to `workers` threads. Exceptions are
/// rethrown on the calling thread.
inline void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!error) error = std::current_exception();
          next = n;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

inline EMonomial parse_emonomial(const std::string& s) {
  if (s == "0") return EMonomial::zero();
  if (s == "1") return EMonomial::power(0);
  if (s == "E") return EMonomial::power(1);
  if (s.rfind("E^", 0) == 0) return EMonomial::power(std::stoi(s.substr(2)));
  throw CacheCorruption("unreadable cached value '" + s + "'");
}

inline std::string filter_name(const BoundsConfig& c) {
  if (c.coloring) return "coloring";
  if (c.kinds.size() == std::size(kSpanningKinds)) return "all";
  std::string s;
  for (auto k : c.kinds) s += (s.empty() ? "" : "+") + std::string(move_kind_name(k));
  return s;
}

struct HalfFoamSet {
  std::vector<HalfFoam> foams;
  std::uint64_t total = 0;
  bool reducible = false;
};

inline HalfFoamSet half_foams(const Web& k, const BoundsConfig& cfg, Reducer& reducer) {
  HalfFoamSet s;
  s.reducible = reducer.reduce(k).ok();
  if (cfg.coloring) {
    auto cf = dotted_coloring_halffoams(k);
    s.total = cf.foams.size();
    s.foams = std::move(cf.foams);
    if (s.foams.size() > cfg.budget) s.foams.resize(cfg.budget);
    return s;
  }
  GeneratingSet gs(std::make_shared<const Web>(k), cfg.kinds, reducer);
  s.total = gs.size();
  s.foams = gs.take(cfg.budget);
  return s;
}

/// Evaluates sampled pairs through the exact route on explicitly glued
/// complexes, in both orders, and compares with the Gram entries.
inline std::size_t check_sampled_pairs(const std::vector<HalfFoam>& foams,
                                    const std::vector<std::vector<EMonomial>>& gram, std::size_t count) {
  std::size_t n = foams.size(), done = 0;
  for (std::size_t t = 0; t < count && n; ++t) {
    std::size_t i = (t * 7919 + 3) % n, j = (t * 104729 + 1) % (i + 1);
    auto ci = build_complex(foams[i]), cj = build_complex(foams[j]);
    auto a = glue_halves(ci, cj), b = glue_halves(cj, ci);
    auto ga = facet_graph(a);
    auto sa = evaluate_bracket(a, ga);
    if (!(evaluate_bracket(b) == sa)) throw InvariantError("pairing is not symmetric on a sampled pair");
    if (!(phi_eval(sa) == gram[i][j]))
      throw InvariantError("exact evaluation disagrees with the Gram entry at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
    if (evaluate_at_omega(a, ga) != (gram[i][j].nonzero ? 1 : 0))
      throw InvariantError("GF(4) evaluation of the glued foam disagrees with the Gram entry");
    ++done;
  }
  return done;
}

inline BoundsReport compute_bounds(const Web& k, const std::string& name, const BoundsConfig& cfg,
                                   const std::function<void(const std::string&)>& log = {}) {
  if (cfg.budget < 1) throw ValidationError("budget must be at least 1");
  auto say = [&](const std::string& s) {
    if (log) log(s);
  };
  BoundsReport rep;
  rep.web = name;
  rep.tait = tait_count(k);
  rep.filter = filter_name(cfg);
  Reducer reducer;
  auto set = half_foams(k, cfg, reducer);
  rep.reducible = set.reducible;
  rep.n_total = set.total;
  const auto& foams = set.foams;
  std::size_t n = foams.size();
  rep.n_used = n;
  if (n == 0) throw ValidationError("no half-foams were generated for " + name);
  say("generated " + std::to_string(n) + " of " + std::to_string(set.total) + " half-foams");

  std::vector<std::string> digest(n);
  parallel_for(n, cfg.workers, [&](std::size_t i) { digest[i] = sha256_hex(serialize(foams[i])); });

  std::optional<EvalCache> cache;
  if (cfg.cache_dir) cache.emplace(*cfg.cache_dir);

  // Entries (i, j), j <= i; look up what the cache already has.
  std::vector<std::vector<EMonomial>> gram(n);
  std::vector<std::vector<char>> known(n);
  std::vector<char> needs_vector(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    gram[i].resize(i + 1);
    known[i].assign(i + 1, 0);
    for (std::size_t j = 0; j <= i; ++j) {
      if (cache) {
        if (auto v = cache->lookup(pair_key(digest[i], digest[j]))) {
          gram[i][j] = parse_emonomial(*v);
          known[i][j] = 1;
          ++rep.cache_hits;
          continue;
        }
      }
      needs_vector[i] = needs_vector[j] = 1;
      ++rep.evaluations;
    }
  }

  std::vector<BoundaryVector> vec(n);
  parallel_for(n, cfg.workers, [&](std::size_t i) {
    if (needs_vector[i]) vec[i] = boundary_vector(build_complex(foams[i]));
  });
  parallel_for(n, cfg.workers, [&](std::size_t i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (known[i][j]) continue;
      auto t0 = std::chrono::steady_clock::now();
      auto e = gram_entry(pair_value(vec[i], vec[j]), foams[i].degree, foams[j].degree);
      gram[i][j] = e;
      if (cache) {
        auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0);
        cache->store(pair_key(digest[i], digest[j]), e.str(), us.count());
      }
    }
  });
  say("Gram entries: " + std::to_string(rep.evaluations) + " evaluated, " + std::to_string(rep.cache_hits) +
      " from cache");

  StreamingRank sr;
  std::vector<int> deg(n);
  for (std::size_t i = 0; i < n; ++i) deg[i] = foams[i].degree;
  GradedMatrix phi(deg, deg);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint8_t> row(i + 1);
    for (std::size_t j = 0; j <= i; ++j) {
      const auto& e = gram[i][j];
      if (e.nonzero && 6 * e.r != deg[i] + deg[j]) throw InvariantError("Gram entry has the wrong degree");
      row[j] = e.nonzero && e.r == 0;
      if (e.nonzero) {
        phi.c[i].set(j);
        phi.c[j].set(i);
      }
    }
    sr.push(row);
  }
  rep.history = sr.history();
  rep.l = sr.rank();
  rep.n_sat = sr.saturation_index();

  auto smith = smith_decompose(phi);
  verify_smith(smith, phi);
  generator_degrees(smith, phi);
  auto g = graded_ranks(smith);
  if (g.l != rep.l) throw InvariantError("Smith count at E = 0 differs from the F2 rank");
  if (rep.l > g.r || g.r > rep.tait) throw InvariantError("bounds out of order: l <= r <= Tait fails");
  if (g.lq.at_one() != static_cast<std::int64_t>(g.l) || g.rq.at_one() != static_cast<std::int64_t>(g.r))
    throw InvariantError("graded ranks disagree with ranks at q = 1");
  rep.r = g.r;
  rep.lq = g.lq;
  rep.rq = g.rq;
  rep.lq_diag = quantum_diagnostics(rep.lq);
  rep.rq_diag = quantum_diagnostics(rep.rq);

  if (cfg.self_check) {
    rep.self_checked = check_sampled_pairs(foams, gram, cfg.self_check_pairs);
    say("self-check: " + std::to_string(rep.self_checked) + " pairs agree");
  }
  return rep;
}

}  // namespace kmfoam
