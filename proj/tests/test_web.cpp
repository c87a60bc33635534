#include <gtest/gtest.h>

#include <algorithm>

#include "kmfoam/tait.hpp"
#include "util.hpp"

using namespace kmfoam;

namespace {

std::vector<int> face_sizes(const Web& w) {
  std::vector<int> out;
  for (const auto& f : faces(w)) out.push_back(f.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(ParseWeb, Theta) {
  auto w = bundled("theta");
  EXPECT_EQ(w.num_vertices(), 2);
  EXPECT_EQ(w.num_edges(), 3);
  EXPECT_EQ(face_sizes(w), (std::vector<int>{2, 2, 2}));
}

TEST(ParseWeb, Circle) {
  auto w = bundled("circle");
  EXPECT_EQ(w.num_vertices(), 0);
  EXPECT_EQ(w.num_edges(), 0);
  EXPECT_EQ(w.num_loops(), 1);
}

TEST(ParseWeb, Dodecahedron) {
  auto w = bundled("dodecahedron");
  EXPECT_EQ(w.num_vertices(), 20);
  EXPECT_EQ(w.num_edges(), 30);
  EXPECT_EQ(face_sizes(w), std::vector<int>(12, 5));
}

TEST(ParseWeb, Cube) { EXPECT_EQ(face_sizes(bundled("cube")), std::vector<int>(6, 4)); }

TEST(ParseWeb, RoundTrip) {
  for (auto name : {"theta", "cube", "dodecahedron", "circle", "bridged"}) {
    auto w = bundled(name);
    auto again = parse_web(write_web(w));
    EXPECT_EQ(write_web(again), write_web(w)) << name;
  }
}

TEST(ParseWeb, FaceSidesCoverEdges) {
  for (auto name : {"theta", "tetrahedron", "cube", "prism5", "dodecahedron", "w2_c24", "bridged"}) {
    auto w = bundled(name);
    int total = 0;
    for (const auto& f : faces(w))
      if (!f.loop_disk) total += f.size();
    EXPECT_EQ(total, 2 * w.num_edges()) << name;
  }
}

TEST(ParseWeb, Errors) {
  auto fails = [](const std::string& text, const std::string& needle) {
    try {
      parse_web(text);
    } catch (const ValidationError& e) {
      EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
      return;
    }
    ADD_FAILURE() << "accepted: " << text;
  };
  fails("vertex u: a b\n", "three half-edges");
  fails("vertex u: a0 b0 c0\nvertex v: a1 c1 b1\nedge a: a0 a1\nedge b: b0 b1\n", "valence");
  fails("vertex u: a0 b0 c0\nedge a: a0 a0\n", "itself");
  fails("vertex u: a0 b0 c0\nvertex v: a1 c1 b1\nedge a: a0 a1\nedge b: b0 b1\nedge c: c0 zz\n", "unknown half-edge");
  fails("bogus line\n", "line 1, column 1");
  // K4 with one rotation reversed is embedded on the torus
  fails("vertex a: ab ad ac\nvertex b: ba bd bc\nvertex c: ca cb cd\nvertex d: da dc db\n"
        "edge e1: ab ba\nedge e2: ac ca\nedge e3: ad da\nedge e4: bc cb\nedge e5: bd db\nedge e6: cd dc\n",
        "spherical");
}

TEST(Tait, Counts) {
  EXPECT_EQ(tait_count(bundled("empty")), 1u);
  EXPECT_EQ(tait_count(bundled("circle")), 3u);
  EXPECT_EQ(tait_count(bundled("theta")), 6u);
  EXPECT_EQ(tait_count(bundled("tetrahedron")), 6u);
  EXPECT_EQ(tait_count(bundled("cube")), 24u);
  EXPECT_EQ(tait_count(bundled("bridged")), 0u);
}

TEST(Bridges, Detect) {
  EXPECT_TRUE(find_bridges(bundled("theta")).empty());
  EXPECT_TRUE(find_bridges(bundled("dodecahedron")).empty());
  auto w = bundled("bridged");
  auto br = find_bridges(w);
  ASSERT_EQ(br.size(), 1u);
  EXPECT_EQ(w.name(*br.begin()), "bridge");
}
