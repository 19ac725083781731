#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace polycfg;

namespace {

LeviGraph levi_b() { return lift(rlg_b_template(3, b_parameters())).graph; }
LeviGraph levi_gr() { return lift(rlg_gr_template()).graph; }

// Levi graph of an ordinary triangle: a hexagon.
LeviGraph triangle() {
  LeviGraph g;
  for (int i = 0; i < 3; ++i) g.add_vertex({"P", i}, Kind::Point);
  for (int i = 0; i < 3; ++i) g.add_vertex({"L", i}, Kind::Line);
  for (int i = 0; i < 3; ++i) g.add_edge(i, 3 + i), g.add_edge((i + 1) % 3, 3 + i);
  return g;
}

}  // namespace

TEST(Perm, CyclesOrderInverse) {
  Perm p = {1, 2, 0, 4, 3};
  EXPECT_EQ(perm_order(p), 6);
  EXPECT_EQ(compose(p, inverse(p)), identity_perm(5));
  EXPECT_EQ(power(p, 6), identity_perm(5));
  EXPECT_EQ(cycles(p).size(), 2u);
  EXPECT_FALSE(is_bijection({0, 0, 1}));
}

TEST(Canon, CertificateIsLabellingInvariant) {
  std::mt19937 rng(3);
  for (const auto& g : {levi_b(), heawood(), oracle::random_levi(6, 6, 0.4, rng)}) {
    auto c = canonical_form(g, true).certificate;
    for (int k = 0; k < 5; ++k) EXPECT_EQ(canonical_form(oracle::shuffled(g, rng), true).certificate, c);
  }
}

TEST(Canon, IsomorphismAgreesWithBruteForce) {
  std::mt19937 rng(5);
  int same = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto a = oracle::random_levi(4, 4, 0.5, rng);
    auto b = trial % 3 == 0 ? oracle::shuffled(a, rng) : oracle::random_levi(4, 4, 0.5, rng);
    for (bool swap : {false, true}) {
      bool want = oracle::isomorphic(a, b, swap);
      EXPECT_EQ(are_isomorphic(a, b, swap), want) << "trial " << trial << " swap " << swap;
      same += want;
    }
  }
  EXPECT_GT(same, 10);
}

TEST(Automorphisms, AgreeWithBruteForceOnSmallGraphs) {
  std::mt19937 rng(13);
  std::vector<LeviGraph> graphs = {triangle()};
  for (int k = 0; k < 25; ++k) graphs.push_back(oracle::random_levi(4, 4, 0.5, rng));
  for (const auto& g : graphs) {
    auto want = oracle::automorphisms(g);
    auto got = automorphisms(g);
    EXPECT_EQ(got.preserving, want.preserving);
    EXPECT_EQ(got.reversing, want.reversing);
    EXPECT_EQ(got.order, want.preserving + want.reversing);
    EXPECT_EQ(static_cast<long>(got.elements.size()), got.order);
    for (const auto& e : got.elements) EXPECT_TRUE(is_automorphism(g, e));
  }
  auto t = automorphisms(triangle());
  EXPECT_EQ(t.preserving, 6);
  EXPECT_EQ(t.reversing, 6);
}

TEST(Automorphisms, BAndGR) {
  auto b = automorphisms(levi_b());
  EXPECT_EQ(b.order, 12);
  EXPECT_EQ(b.preserving, 6);
  EXPECT_EQ(b.reversing, 6);
  EXPECT_TRUE(acceptance::has_dihedral_presentation(b));
  EXPECT_EQ(duality_rank(levi_b()).value_or(-1), 2);
  auto gr = automorphisms(levi_gr());
  EXPECT_EQ(gr.order, 672);
  EXPECT_EQ(gr.preserving, 336);
  EXPECT_EQ(gr.reversing, 336);
  auto h = automorphisms(heawood());
  EXPECT_EQ(h.preserving, 168);
  EXPECT_EQ(h.reversing, 168);
}

TEST(Automorphisms, ParseCycleNotation) {
  auto g = triangle();
  auto rot = parse_cycles(g, "(P_0,P_1,P_2)(L_0,L_1,L_2)");
  EXPECT_TRUE(is_automorphism(g, rot));
  EXPECT_EQ(rot.order, 3);
  auto bad = parse_cycles(g, "(P_0,P_1)");
  EXPECT_FALSE(is_automorphism(g, bad));
  EXPECT_THROW(parse_cycles(g, "(P_0,Q_7)"), ValidationError);
}

TEST(Quotient, GRSemiregularCensus) {
  auto g = levi_gr();
  auto sr = semiregular_automorphisms(g);
  EXPECT_EQ(sr.size(), 314u);
  std::map<Certificate, QuotientGraph> classes;
  for (const auto& s : sr) classes.try_emplace(quotient(g, s.map).certificate(), quotient(g, s.map));
  EXPECT_EQ(classes.size(), 8u);
  std::vector<int> bip;
  for (const auto& [c, q] : classes)
    if (q.bipartite) {
      bip.push_back(q.size());
      EXPECT_TRUE(are_isomorphic(lift(q.reduced(g)).graph, g, false));
    }
  std::sort(bip.begin(), bip.end());
  EXPECT_EQ(bip, (std::vector<int>{6, 14}));
}

TEST(Quotient, DeckQuotientRecoversTheTemplate) {
  auto g = levi_b();
  auto q = quotient(g, deck_transformation(g, 3));
  EXPECT_TRUE(q.bipartite);
  EXPECT_EQ(q.size(), 14);
  EXPECT_TRUE(are_isomorphic(lift(q.reduced(g)).graph, g, false));
  EXPECT_THROW(quotient(g, identity_perm(g.size())), ValidationError);
}

TEST(NamedGraphs, KroneckerCoverOfHeawoodLineGraph) {
  auto lg = line_graph(heawood());
  EXPECT_EQ(lg.size(), 21u);
  for (const auto& a : lg) EXPECT_EQ(a.size(), 4u);
  EXPECT_TRUE(are_isomorphic(kronecker_cover(lg), levi_gr(), false));
  EXPECT_FALSE(are_isomorphic(kronecker_cover(lg), levi_b(), true));
}
