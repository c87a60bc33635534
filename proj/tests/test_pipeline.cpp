#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "kmfoam/report.hpp"
#include "util.hpp"

using namespace kmfoam;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  auto d = fs::temp_directory_path() / ("kmfoam-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(d);
  return d;
}

BoundsReport run(const Web& w, const std::string& name, BoundsConfig cfg = {}) {
  return compute_bounds(w, name, cfg);
}

}  // namespace

TEST(Cache, Sha256) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(pair_key("x", "y"), pair_key("y", "x"));
  EXPECT_NE(pair_key("x", "y"), pair_key("x", "z"));
}

TEST(Cache, PersistsAndDetectsCorruption) {
  auto dir = scratch_dir("cache");
  {
    EvalCache c(dir);
    c.store("k1", "E^2", 5);
    c.store("k2", "0", 7);
    c.store("k1", "E^2", 9);  // idempotent
    EXPECT_EQ(c.stats().entries, 2u);
  }
  {
    EvalCache c(dir);
    EXPECT_EQ(c.lookup("k1"), "E^2");
    EXPECT_EQ(c.lookup("k2"), "0");
    EXPECT_FALSE(c.lookup("k3"));
    EXPECT_EQ(c.stats().lines, 2u);
  }
  {
    std::fstream f(dir / "entries.log", std::ios::in | std::ios::out);
    f.seekp(3);
    f.put('Z');
  }
  EXPECT_THROW(EvalCache{dir}, CacheCorruption);
  EvalCache tolerant(dir, true);
  EXPECT_EQ(tolerant.stats().bad_lines, 1u);
  EXPECT_EQ(tolerant.lookup("k2"), "0");
  fs::remove_all(dir);
}

TEST(Pipeline, ReducibleWebsReachTait) {
  for (const char* name : {"empty", "circle", "theta", "tetrahedron", "cube", "prism5"}) {
    auto r = run(bundled(name), name);
    EXPECT_TRUE(r.reducible) << name;
    EXPECT_EQ(r.l, r.tait) << name;
    EXPECT_EQ(r.r, r.tait) << name;
  }
  auto t = run(bundled("theta"), "theta");
  EXPECT_EQ(t.l, 6u);
  EXPECT_EQ(t.lq.str(), "q^-3 + 2q^-1 + 2q + q^3");
}

TEST(Pipeline, RandomReducibleWebs) {
  for (unsigned seed = 1; seed <= 12; ++seed) {
    Web w = random_web(seed, 4 + 2 * static_cast<int>(seed % 4));
    BoundsConfig cfg;
    cfg.budget = 400;
    auto r = run(w, "random", cfg);
    ASSERT_TRUE(r.reducible);
    EXPECT_EQ(r.l, r.tait) << "seed " << seed;
    EXPECT_EQ(r.lq.at_one(), static_cast<std::int64_t>(r.l));
    EXPECT_EQ(r.rq.at_one(), static_cast<std::int64_t>(r.r));
  }
}

TEST(Pipeline, BridgedWebHasNoRank) {
  auto r = run(bundled("bridged"), "bridged");
  EXPECT_EQ(r.tait, 0u);
  EXPECT_EQ(r.l, 0u);
  EXPECT_EQ(r.r, 0u);
}

TEST(Pipeline, SaturationHistoryIsMonotone) {
  BoundsConfig cfg;
  cfg.budget = 300;
  auto r = run(bundled("dodecahedron"), "W1", cfg);
  ASSERT_EQ(r.history.size(), r.n_used);
  for (std::size_t i = 1; i < r.history.size(); ++i) {
    EXPECT_LE(r.history[i - 1], r.history[i]);
    EXPECT_LE(r.history[i], r.history[i - 1] + 2);  // one new row and column
  }
  EXPECT_EQ(r.history[r.n_sat - 1], r.l);
  if (r.n_sat > 1) {
    EXPECT_LT(r.history[r.n_sat - 2], r.l);
  }
  EXPECT_LE(r.l, r.r);
  EXPECT_LE(r.r, r.tait);
}

TEST(Pipeline, DeterministicAcrossWorkersAndCache) {
  Web w = bundled("dodecahedron");
  BoundsConfig cfg;
  cfg.budget = 200;
  auto base = report_json(run(w, "W1", cfg)).dump();
  EXPECT_EQ(report_json(run(w, "W1", cfg)).dump(), base);
  cfg.workers = 4;
  EXPECT_EQ(report_json(run(w, "W1", cfg)).dump(), base);

  auto dir = scratch_dir("pipeline");
  cfg.cache_dir = dir;
  auto cold = run(w, "W1", cfg);
  EXPECT_EQ(cold.cache_hits, 0u);
  EXPECT_EQ(cold.evaluations, 200u * 201u / 2);
  cfg.workers = 2;
  auto warm = run(w, "W1", cfg);
  EXPECT_EQ(warm.evaluations, 0u);
  EXPECT_EQ(warm.cache_hits, cold.evaluations);
  EXPECT_EQ(report_json(warm).dump(), base);
  EXPECT_EQ(saturation_csv(warm), saturation_csv(cold));
  fs::remove_all(dir);
}

TEST(Pipeline, SelfCheckAgreesWithExactRoute) {
  BoundsConfig cfg;
  cfg.budget = 60;
  cfg.self_check = true;
  cfg.self_check_pairs = 12;
  for (const char* name : {"theta", "cube", "dodecahedron"}) {
    auto r = run(bundled(name), name, cfg);
    EXPECT_GT(r.self_checked, 0u) << name;
  }
}

TEST(Pipeline, TableOutputs) {
  std::vector<TableRow> none;
  EXPECT_EQ(table_json(none).dump(), "[]");
  auto csv = table_csv(none);
  EXPECT_EQ(csv.find('\n'), csv.size() - 1);  // header only
}

namespace {

int cli(const std::string& args) {
  std::string cmd = std::string(KMFOAM_CLI) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Cli, ExitCodes) {
  auto dir = scratch_dir("cli");
  fs::create_directories(dir);
  std::ofstream(dir / "bad.web") << "vertex u: a0 b0\n";
  std::string webs = std::string(KMFOAM_DATA_DIR) + "/webs/";
  EXPECT_EQ(cli("info " + webs + "theta.web"), 0);
  EXPECT_EQ(cli("table"), 0);
  EXPECT_EQ(cli("bounds " + webs + "theta.web --no-cache --format json"), 0);
  EXPECT_EQ(cli("--no-such-flag"), 1);
  EXPECT_EQ(cli("bounds"), 1);
  EXPECT_EQ(cli("info " + (dir / "missing.web").string()), 2);
  EXPECT_EQ(cli("info " + (dir / "bad.web").string()), 2);
  EXPECT_EQ(cli("bounds " + webs + "theta.web --no-cache --budget 0"), 1);  // rejected by the parser
  EXPECT_EQ(cli("bounds " + webs + "circle.web --no-cache --filter coloring"), 2);
  std::ofstream(dir / "entries.log") << "garbage line\n";
  EXPECT_EQ(cli("cache verify --cache-dir " + dir.string()), 2);
  fs::remove_all(dir);
}
