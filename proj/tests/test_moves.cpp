#include <gtest/gtest.h>

#include "kmfoam/canonical.hpp"
#include "kmfoam/moves.hpp"
#include "kmfoam/reduce.hpp"
#include "kmfoam/tait.hpp"
#include "util.hpp"

using namespace kmfoam;

namespace {

std::vector<Web> test_webs() {
  std::vector<Web> out;
  for (auto name : {"circle", "theta", "tetrahedron", "cube", "prism5", "dodecahedron", "w2_c24", "bridged"})
    out.push_back(bundled(name));
  for (unsigned seed = 1; seed <= 30; ++seed) out.push_back(random_web(seed, 4 + 2 * (seed % 6)));
  return out;
}

}  // namespace

TEST(Sites, Examples) {
  EXPECT_EQ(enumerate_sites(bundled("theta"), MoveKind::Bigon).size(), 3u);
  EXPECT_EQ(enumerate_sites(bundled("circle"), MoveKind::Disk).size(), 1u);
  EXPECT_EQ(enumerate_sites(bundled("theta"), MoveKind::IH).size(), 3u);
  auto w1 = bundled("dodecahedron");
  EXPECT_EQ(enumerate_sites(w1, MoveKind::Zip).size(), 120u);
  EXPECT_EQ(enumerate_sites(w1, MoveKind::Saddle).size(), 120u);
  EXPECT_EQ(enumerate_sites(w1, MoveKind::Unzip).size(), 30u);
  for (auto k : {MoveKind::Bigon, MoveKind::Triangle, MoveKind::Square})
    EXPECT_TRUE(enumerate_sites(w1, k).empty());
}

TEST(Sites, TextRoundTrip) {
  for (const auto& w : test_webs())
    for (auto k : kAllMoveKinds)
      for (const auto& s : enumerate_sites(w, k)) EXPECT_EQ(parse_site(w, site_text(w, s)), s);
}

TEST(Apply, Examples) {
  auto theta = bundled("theta");
  auto r = apply_move(theta, enumerate_sites(theta, MoveKind::Bigon)[0]);
  EXPECT_EQ(r.web.num_vertices(), 0);
  EXPECT_EQ(r.web.num_loops(), 1);
  auto c = bundled("circle");
  EXPECT_TRUE(apply_move(c, enumerate_sites(c, MoveKind::Disk)[0]).web.empty());
  // unzipping an edge of the theta leaves two circles
  auto u = apply_move(theta, enumerate_sites(theta, MoveKind::Unzip)[0]);
  EXPECT_EQ(u.web.num_loops(), 2);
  EXPECT_FALSE(u.generic);
}

TEST(Apply, LabelsOutsideSitePreserved) {
  auto w = bundled("dodecahedron");
  for (auto k : {MoveKind::Zip, MoveKind::Saddle, MoveKind::Unzip, MoveKind::IH})
    for (const auto& s : enumerate_sites(w, k)) {
      auto r = apply_move(w, s);
      for (int e = 0; e < w.num_edges(); ++e) {
        Label l = w.edge_label(e);
        if (std::find(r.src_e.begin(), r.src_e.end(), l) != r.src_e.end()) continue;
        auto e2 = r.web.find_edge(l);
        ASSERT_TRUE(e2.has_value()) << site_text(w, s);
        EXPECT_EQ(r.web.vertex_label(r.web.vertex_of(2 * *e2)), w.vertex_label(w.vertex_of(2 * e)));
        EXPECT_EQ(r.web.vertex_label(r.web.vertex_of(2 * *e2 + 1)), w.vertex_label(w.vertex_of(2 * e + 1)));
      }
    }
}

TEST(TaitRelations, EveryEliminationSite) {
  int checked = 0;
  for (const auto& w : test_webs()) {
    auto t = tait_count(w);
    for (auto s : enumerate_sites(w, MoveKind::Disk)) {
      EXPECT_EQ(t, 3 * tait_count(apply_move(w, s).web));
      ++checked;
    }
    for (auto s : enumerate_sites(w, MoveKind::Bigon)) {
      EXPECT_EQ(t, 2 * tait_count(apply_move(w, s).web));
      ++checked;
    }
    for (auto s : enumerate_sites(w, MoveKind::Triangle)) {
      EXPECT_EQ(t, tait_count(apply_move(w, s).web));
      ++checked;
    }
    for (auto s : enumerate_sites(w, MoveKind::Square)) {
      auto [a, b] = apply_square(w, s);
      EXPECT_EQ(t, tait_count(a.web) + tait_count(b.web));
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(Inverse, ZipThenUnzip) {
  for (auto name : {"dodecahedron", "cube", "w2_c24"}) {
    auto w = bundled(name);
    auto code = canonical_code(w);
    for (const auto& s : enumerate_sites(w, MoveKind::Zip)) {
      auto z = apply_move(w, s);
      auto back = apply_move(z.web, {MoveKind::Unzip, {}, {}, z.res_e[4], 0});
      EXPECT_EQ(canonical_code(back.web), code) << site_text(w, s);
    }
  }
}

TEST(Inverse, UnzipThenZip) {
  auto w = bundled("dodecahedron");
  auto code = canonical_code(w);
  for (const auto& s : enumerate_sites(w, MoveKind::Unzip)) {
    auto u = apply_move(w, s);
    int found = 0;
    for (const auto& z : enumerate_sites(u.web, MoveKind::Zip)) {
      bool ours = (z.a.edge == u.res_e[0] && z.b.edge == u.res_e[1]) ||
                  (z.a.edge == u.res_e[1] && z.b.edge == u.res_e[0]);
      if (ours && canonical_code(apply_move(u.web, z).web) == code) ++found;
    }
    EXPECT_GE(found, 1) << site_text(w, s);
  }
}

TEST(Inverse, IHInvolution) {
  for (const auto& w : test_webs()) {
    auto code = canonical_code(w);
    for (const auto& s : enumerate_sites(w, MoveKind::IH)) {
      auto r = apply_move(w, s);
      if (!r.generic) continue;
      auto back = apply_move(r.web, {MoveKind::IH, {}, {}, r.res_e[0], 0});
      EXPECT_EQ(canonical_code(back.web), code);
    }
  }
}

TEST(Canonical, Examples) {
  auto theta = bundled("theta");
  auto relabeled = parse_web("vertex q: x1 z1 y1\nvertex p: x0 y0 z0\nedge y: y0 y1\nedge x: x0 x1\nedge z: z0 z1\n");
  EXPECT_EQ(canonical_code(theta), canonical_code(relabeled));
  EXPECT_NE(canonical_code(theta), canonical_code(bundled("circle")));
  EXPECT_NE(canonical_code(bundled("w3_c28")), canonical_code(bundled("w4_c28")));
  auto w = bundled("dodecahedron");
  EXPECT_EQ(canonical_code(w), canonical_code(parse_web(write_web(w))));
}

TEST(Reduce, Examples) {
  auto t = reduce(bundled("theta"));
  ASSERT_TRUE(t.ok());
  EXPECT_EQ(t.tree->basis_size, 6u);
  auto e = reduce(bundled("empty"));
  ASSERT_TRUE(e.ok());
  EXPECT_TRUE(e.tree->leaf());
  EXPECT_FALSE(reduce(bundled("dodecahedron")).ok());
}

TEST(Reduce, BasisSizeIsTait) {
  int reducible = 0;
  for (const auto& w : test_webs()) {
    auto r = reduce(w);
    if (!r.ok()) continue;
    ++reducible;
    EXPECT_EQ(r.tree->basis_size, tait_count(w));
  }
  EXPECT_GT(reducible, 10);
}
