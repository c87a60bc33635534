#include <gtest/gtest.h>

#include <random>

#include "kmfoam/evaluate.hpp"
#include "kmfoam/generate.hpp"
#include "oracle.hpp"
#include "util.hpp"

using namespace kmfoam;
using namespace oracle;

namespace {

void expect_matches_oracle(const SymPoly& s, const oracle::FacetData& d) { EXPECT_TRUE(oracle::matches(s, d)); }

}  // namespace

TEST(Poly, ToElementaryExamples) {
  MultiPoly p;
  p.add_term({1, 0, 0});
  p.add_term({0, 1, 0});
  p.add_term({0, 0, 1});
  EXPECT_EQ(to_elementary(p), SymPoly::monomial({1, 0, 0}));
  MultiPoly sq = p * p;
  EXPECT_EQ(sq.size(), 3u);
  EXPECT_EQ(to_elementary(sq), SymPoly::monomial({2, 0, 0}));
  EXPECT_EQ(to_elementary(MultiPoly::monomial({2, 2, 2})), SymPoly::monomial({0, 0, 2}));
  EXPECT_THROW(to_elementary(MultiPoly::monomial({1, 0, 0})), InvariantError);
}

TEST(Poly, ElementaryRoundTrip) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    SymPoly s;
    for (int k = 0; k < 6; ++k) s.add_term({static_cast<int>(rng() % 4), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)});
    EXPECT_EQ(to_elementary(s.expand()), s);
  }
}

TEST(Poly, ExactDivision) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    MultiPoly q;
    for (int k = 0; k < 5; ++k) q.add_term({static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)});
    int i = rng() % 3, j = (i + 1 + rng() % 2) % 3;
    EXPECT_EQ((q * MultiPoly::pair_sum(i, j)).divide_pair_sum(i, j), q);
  }
  EXPECT_THROW(MultiPoly::monomial({1, 0, 0}).divide_pair_sum(0, 1), InvariantError);
}

TEST(Poly, PhiEval) {
  EXPECT_EQ(phi_eval(SymPoly::monomial({1, 1, 0})), EMonomial::zero());
  EXPECT_EQ(phi_eval(SymPoly::monomial({0, 0, 1})), EMonomial::power(1));
  EXPECT_EQ(phi_eval(SymPoly::monomial({0, 0, 0})), EMonomial::power(0));
  SymPoly bad;
  bad.add_term({0, 0, 0});
  bad.add_term({0, 0, 1});
  EXPECT_THROW(phi_eval(bad), InvariantError);
}

TEST(Evaluate, ColoringsAndExponents) {
  auto sg = facet_graph(sphere_complex(0));
  auto cs = admissible_colorings(sg);
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_EQ(q_exponents(sg, cs[0]), (std::array<int, 3>{1, 1, 0}));
  auto tg = facet_graph(theta_complex({0, 0, 0}));
  auto ct = admissible_colorings(tg);
  EXPECT_EQ(ct.size(), 6u);
  for (const auto& c : ct) EXPECT_EQ(q_exponents(tg, c), (std::array<int, 3>{1, 1, 1}));

  // Two spheres side by side.
  auto one = sphere_complex(0);
  CellComplex two = one;
  int off0 = two.num0, off1 = two.num1();
  for (auto e : one.cells1) two.cells1.push_back({e[0] + off0, e[1] + off0});
  two.num0 += one.num0;
  for (std::size_t f = 0; f < one.cells2.size(); ++f) {
    auto b = one.cells2[f];
    for (int& e : b) e += off1;
    two.cells2.push_back(b);
    two.dots.push_back(0);
  }
  auto g2 = facet_graph(two);
  ASSERT_EQ(g2.num_facets, 2);
  EXPECT_EQ(q_exponents(g2, {0, 1})[0], 2);
}

TEST(Evaluate, SphereOracle) {
  const int expect[3] = {0, 0, 1};
  for (int d = 0; d <= 2; ++d) {
    auto c = sphere_complex(d);
    auto s = evaluate_bracket(c);
    expect_matches_oracle(s, sphere_data(d));
    EXPECT_EQ(jflat(c), expect[d]);
  }
  EXPECT_EQ(foam_degree(sphere_complex(0)), -4);
  EXPECT_EQ(evaluate_bracket(sphere_complex(2)), SymPoly::monomial({0, 0, 0}));
}

TEST(Evaluate, ThetaOracle) {
  auto undotted = theta_complex({0, 0, 0});
  EXPECT_TRUE(evaluate_bracket(undotted).zero());
  expect_matches_oracle(evaluate_bracket(undotted), theta_data({0, 0, 0}));
  auto dotted = theta_complex({0, 1, 2});
  EXPECT_EQ(jflat(dotted), 1);
  expect_matches_oracle(evaluate_bracket(dotted), theta_data({0, 1, 2}));
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) expect_matches_oracle(evaluate_bracket(theta_complex({a, b, c})), theta_data({a, b, c}));
}

// Exact bracket, GF(4) value of the glued foam and the factorised pairing of
// boundary vectors agree; the pairing is symmetric and graded.
TEST(Evaluate, RoutesAgreeOnReducibleBases) {
  for (auto name : {"circle", "theta", "tetrahedron", "cube"}) {
    auto basis = reducible_basis(reduce(bundled(name)).tree);
    std::vector<BoundaryVector> vec;
    for (const auto& f : basis) vec.push_back(boundary_vector(build_complex(f)));
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        auto c = glue(basis[i].movie, basis[j].movie);
        auto g = facet_graph(c);
        auto s = evaluate_bracket(c, g);
        auto phi = phi_eval(s);
        auto w = evaluate_at_omega(c, g);
        EXPECT_EQ(w, phi.nonzero ? 1 : 0) << name << " " << i << " " << j;
        EXPECT_EQ(pair_value(vec[i], vec[j]), w);
        auto rev = glue(basis[j].movie, basis[i].movie);
        EXPECT_EQ(evaluate_bracket(rev), s);
        EXPECT_EQ(gram_entry(w, basis[i].degree, basis[j].degree), phi);
        if (!s.zero()) EXPECT_EQ(s.degree(), basis[i].degree + basis[j].degree);
      }
  }
}
