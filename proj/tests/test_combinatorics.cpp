#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace polycfg;

namespace {

ParameterVector kBParams = {1, 2, 1, 1, 1, 2, 1, 1, 2, 1, 1, 1, 2, 1, 0};

}  // namespace

TEST(Label, ParsesEveryAcceptedSpelling) {
  EXPECT_EQ(Label::parse("R_2"), (Label{"R", 2}));
  EXPECT_EQ(Label::parse("M1"), (Label{"M", 1}));
  EXPECT_EQ(Label::parse("G"), (Label{"G", 0}));
  EXPECT_EQ((Label{"M", 1}).pretty(), "M₁");
  EXPECT_THROW(Label::parse(""), ValidationError);
  EXPECT_THROW(Label::parse("12"), ValidationError);
}

TEST(IncidenceStructure, RejectsMalformedInput) {
  IncidenceStructure s{{{"P", 0}}, {{"L", 0}}, {{{"P", 0}, {"L", 0}}}};
  EXPECT_NO_THROW(s.validate());
  auto dup = s;
  dup.incidences.push_back(dup.incidences[0]);
  EXPECT_THROW(dup.validate(), ValidationError);
  auto dangling = s;
  dangling.incidences.push_back({{"Q", 0}, {"L", 0}});
  EXPECT_THROW(dangling.validate(), ValidationError);
  auto twice = s;
  twice.points.push_back({"P", 0});
  EXPECT_THROW(twice.validate(), ValidationError);
}

TEST(Lift, ReproducesTheIncidenceTableOfB) {
  auto l = lift(rlg_b_template(3, kBParams));
  EXPECT_EQ(l.structure.incidences.size(), 84u);
  EXPECT_EQ(l.structure.incidence_set(), acceptance::table1_incidences());
}

TEST(Lift, AgreesWithDirectArcExpansion) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> v(0, 4);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    ParameterVector p;
    for (auto& x : p) x = v(rng);
    auto r = rlg_b_template(5, p);
    try {
      auto l = lift(r);
      EXPECT_EQ(l.structure.incidence_set(), oracle::lift_pairs(r));
      EXPECT_EQ(l.structure.incidence_set().size(), l.structure.incidences.size());
      ++checked;
    } catch (const DegenerateLift&) {
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(Lift, ParallelArcsWithEqualVoltageAreRejected) {
  auto p = kBParams;
  p[7] = 0;  // a' = 0 makes both r-M arcs carry voltage 0
  EXPECT_THROW(lift(rlg_b_template(3, p)), DegenerateLift);
}

TEST(Lift, DeckTransformationIsAnAutomorphism) {
  auto g = lift(rlg_b_template(3, kBParams)).graph;
  auto vp = make_vertex_permutation(g, deck_transformation(g, 3));
  EXPECT_TRUE(is_automorphism(g, vp));
  EXPECT_EQ(vp.order, 3);
}

TEST(Girth, MatchesEdgeRemovalOracle) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = oracle::random_levi(6 + trial % 5, 5 + trial % 4, 0.35, rng);
    EXPECT_EQ(girth(g), oracle::girth(g.adj)) << "trial " << trial;
  }
  EXPECT_EQ(girth(heawood()), 6);
  EXPECT_EQ(girth(lift(rlg_b_template(3, kBParams)).graph), 6);
  LeviGraph tree;
  tree.add_vertex({"P", 0}, Kind::Point);
  tree.add_vertex({"L", 0}, Kind::Line);
  tree.add_edge(0, 1);
  EXPECT_EQ(girth(tree), kInfinity);
}

TEST(Girth, FourCycleFailsTheConfigurationCheck) {
  LeviGraph g;
  for (int i = 0; i < 2; ++i) g.add_vertex({"P", i}, Kind::Point);
  for (int i = 0; i < 2; ++i) g.add_vertex({"L", i}, Kind::Line);
  for (int p = 0; p < 2; ++p)
    for (int l = 2; l < 4; ++l) g.add_edge(p, l);
  auto r = validate_nk(g, 2, 2);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.girth, 4);
}

TEST(Census, TypeSymbol) {
  auto b = lift(rlg_b_template(3, kBParams)).structure;
  EXPECT_EQ(degree_census(b).symbol(), "((21₄))");
  auto qc = qc_structure(kBParams);
  EXPECT_EQ(degree_census(qc).symbol(), "((6₂)(9₄))");
  EXPECT_EQ(qc.incidences.size(), 48u);
  IncidenceStructure lopsided{{{"P", 0}, {"P", 1}}, {{"L", 0}}, {{{"P", 0}, {"L", 0}}, {{"P", 1}, {"L", 0}}}};
  EXPECT_EQ(degree_census(lopsided).symbol(), "((2₁), (1₂))");
}

TEST(Parameters, ParseAndPrint) {
  EXPECT_EQ(parse_parameters(to_string(kBParams)), kBParams);
  EXPECT_THROW(parse_parameters("1 2 3"), ValidationError);
}

TEST(Enumeration, SeventeenClassesOverZ3) {
  EnumerationStats stats;
  auto recs = enumerate_z3({}, &stats);
  ASSERT_EQ(recs.size(), 17u);
  int configurations = 0;
  for (const auto& r : recs) configurations += r.self_dual ? 1 : 2;
  EXPECT_EQ(configurations, 18);
  EXPECT_GT(stats.candidates, stats.girth_survivors);
  std::set<Certificate> certs;
  for (const auto& r : recs) {
    auto l = lift(rlg_b_template(3, r.params));
    EXPECT_TRUE(validate_nk(l.graph, 21, 4).ok);
    EXPECT_EQ(canonical_form(l.graph, true).certificate, r.certificate);
    certs.insert(r.certificate);
  }
  EXPECT_EQ(certs.size(), 17u);
  for (const auto& t : table2_reference()) {
    auto c = canonical_form(lift(rlg_b_template(3, t.params)).graph, true).certificate;
    EXPECT_TRUE(certs.count(c)) << "row " << t.item;
  }
}

TEST(Enumeration, ParallelSweepAgreesWithSerial) {
  EnumerationFilters serial, parallel;
  parallel.jobs = 3;
  auto a = enumerate_z3(serial), b = enumerate_z3(parallel);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].certificate, b[i].certificate);
    EXPECT_EQ(a[i].params, b[i].params);
    EXPECT_EQ(a[i].representatives, b[i].representatives);
  }
}
