#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"

using namespace polycfg;

namespace {

const SyntheticResult& synthetic() {
  static const SyntheticResult r = bisect_realize(SyntheticFrame::standard(Precision{512}), b_parameters(), Precision{512});
  return r;
}

}  // namespace

TEST(Synthetic, CoincidencePosition) {
  const auto& r = synthetic();
  EXPECT_NEAR(r.xpos.to_double(), -0.031440363334572, 1e-12);
  PrecisionScope scope(Precision{512});
  EXPECT_LT(abs(r.gap).to_double(), 1e-70);
}

TEST(Synthetic, ResultIsTheB21Configuration) {
  const auto& cfg = synthetic().configuration;
  EXPECT_EQ(cfg.points.size(), 21u);
  EXPECT_EQ(cfg.lines.size(), 21u);
  EXPECT_EQ(cfg.incidences.size(), 84u);
  EXPECT_TRUE(check_strong(cfg, 1e-60, 1e-6).ok);
  EXPECT_TRUE(are_isomorphic(extract_levi(cfg, 1e-60), lift(rlg_b_template(3, b_parameters())).graph, false));
  EXPECT_EQ(geometric_symmetries(cfg).order(), 3);
}

TEST(Synthetic, AgreesWithTheInsideAnalyticSolution) {
  auto inside = acceptance::inside_b_solution({});
  ASSERT_TRUE(inside);
  auto pr = align(synthetic().configuration, inside->configuration);
  EXPECT_LT(pr.residual, 1e-9);
}

TEST(Synthetic, FrameHonoursTheRequestedPrecision) {
  auto f = SyntheticFrame::standard(Precision{512});
  EXPECT_EQ(f.R[0].x.bits(), 512);
  PrecisionScope scope(Precision{512});
  EXPECT_LT(abs(f.R[0].x * f.R[0].x + f.R[0].y * f.R[0].y - Real(1)).to_double(), 1e-150);
}

TEST(Synthetic, QuasiConfigurationAlongTheInterval) {
  Precision prec{256};
  PrecisionScope scope(prec);
  auto frame = SyntheticFrame::standard();
  auto qc = qc_structure(b_parameters());
  for (double t : {0.1, 0.5, 0.9}) {
    Real x = frame.R[1].x + (frame.midpoint01().x - frame.R[1].x) * Real(t);
    auto cfg = configuration_from_synthetic(build_qc(x, frame, prec), qc, prec.bits);
    EXPECT_EQ(extract_incidences(cfg, 1e-30).incidence_set(), qc.incidence_set()) << "t " << t;
  }
}

TEST(Synthetic, SelfReciprocalWithTheDualityPairing) {
  const auto& cfg = synthetic().configuration;
  auto rep = self_reciprocity_check(cfg);
  EXPECT_EQ(rep.best, ReciprocityKind::Reflexible);
  bool matched = false;
  for (const auto& rc : rep.found) matched = matched || acceptance::matches_b_duality(cfg, rc);
  EXPECT_TRUE(matched);
}

TEST(Celestial, AdmissibleSymbolsForSeven) {
  auto got = enumerate_celestial(7);
  ASSERT_EQ(got.size(), 6u);
  EXPECT_TRUE(std::find(got.begin(), got.end(), gr_symbol()) != got.end());
  for (const auto& s : got) {
    EXPECT_TRUE(admissible(s).ok);
    EXPECT_TRUE(cosine_condition(s));
  }
}

TEST(Celestial, CosineConditionOracle) {
  auto prod = [](std::array<int, 3> a) {
    double p = 1;
    for (int v : a) p *= std::cos(M_PI * v / 7);
    return p;
  };
  auto sym = gr_symbol();
  EXPECT_NEAR(prod(sym.s), prod(sym.t), 1e-15);
  CelestialSymbol bad{7, {1, 1, 1}, {2, 2, 2}};
  EXPECT_GT(std::abs(prod(bad.s) - prod(bad.t)), 1e-3);
  EXPECT_FALSE(cosine_condition(bad));
  EXPECT_THROW(check_range({7, {4, 1, 1}, {1, 1, 1}}), ValidationError);
}

TEST(Celestial, RejectionReasons) {
  auto same = admissible({7, {1, 2, 3}, {1, 2, 3}});
  EXPECT_FALSE(same.ok);
  EXPECT_NE(same.reason.find("span equals crossing"), std::string::npos);
  auto next = admissible({7, {1, 2, 3}, {2, 3, 1}});
  EXPECT_FALSE(next.ok);
  EXPECT_NE(next.reason.find("crossing equals next span"), std::string::npos);
  EXPECT_EQ(admissible({7, {1, 1, 1}, {2, 2, 2}}).reason, "cosine condition fails");
}

TEST(Celestial, GRCoordinates) {
  auto cfg = gr_coordinates();
  EXPECT_EQ(cfg.points.size(), 21u);
  EXPECT_TRUE(check_strong(cfg, 1e-30, 1e-6).ok);
  EXPECT_TRUE(are_isomorphic(extract_levi(cfg, 1e-30), lift(rlg_gr_template()).graph, false));
  auto sym = geometric_symmetries(cfg);
  EXPECT_EQ(sym.rotations, 7);
  EXPECT_EQ(sym.reflections, 7);
  EXPECT_EQ(self_reciprocity_check(cfg).best, ReciprocityKind::Perfect);
  auto radii = ring_radii(gr_symbol());
  EXPECT_NEAR(radii[0].to_double(), 1, 1e-15);
}

TEST(Families, ParameterVectors) {
  EXPECT_EQ(family_params({Family::F1, 3, 1, 1}), (ParameterVector{1, 2, 1, 1, 1, 2, 1, 1, 2, 1, 1, 1, 2, 1, 0}));
  EXPECT_EQ(family_params({Family::F2, 5, 3, 1}), (ParameterVector{3, 1, 1, 1, 1, 1, 1, 3, 1, 1, 1, 1, 1, 1, 0}));
  EXPECT_THROW(family_params({Family::F1, 5, 1, 2}), ValidationError);
  EXPECT_THROW(family_params({Family::F1, 5, 3, 1}), ValidationError);
  EXPECT_THROW(family_params({Family::F2, 6, 3, 1}), ValidationError);
  EXPECT_THROW(family_params({Family::F2, 2, 1, 1}), ValidationError);
}

TEST(Families, F1AtThreeIsB) {
  auto r = family_lift_report(3, family_params({Family::F1, 3, 1, 1}));
  ASSERT_TRUE(r.liftable);
  EXPECT_TRUE(r.nk.ok);
  EXPECT_EQ(r.certificate, canonical_form(lift(rlg_b_template(3, b_parameters())).graph, true).certificate);
}

TEST(Families, SpecListingRespectsConstraints) {
  for (auto f : {Family::F1, Family::F2})
    for (const auto& s : family_specs(f, 3, 9)) EXPECT_NO_THROW(check_spec(s)) << s.str();
  EXPECT_EQ(family_specs(Family::F1, 3, 3).size(), 1u);
}

TEST(Families, LiftReportsAreConfigurations) {
  for (auto f : {Family::F1, Family::F2})
    for (const auto& s : family_specs(f, 4, 8)) {
      auto r = family_lift_report(s.m, family_params(s));
      if (!r.liftable) continue;
      EXPECT_EQ(r.nk.points, 7 * s.m) << s.str();
      EXPECT_EQ(r.girth, oracle::girth(lift(rlg_b_template(s.m, family_params(s))).graph.adj)) << s.str();
    }
}
