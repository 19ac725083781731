#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"

using namespace polycfg;

namespace {

const std::vector<SolutionCandidate>& b_candidates() {
  static const auto c = solve_system(3, b_parameters());
  return c;
}

std::vector<const SolutionCandidate*> with_status(const std::vector<SolutionCandidate>& cs, Status s) {
  std::vector<const SolutionCandidate*> out;
  for (const auto& c : cs)
    if (c.status == s) out.push_back(&c);
  return out;
}

// Sign changes of a polynomial on a fine grid; counts simple real roots in [-lim, lim].
int sampled_root_count(const KnownRootOracle& o, double lim, int samples) {
  auto eval = [&](double s) {
    long double v = 0;
    for (long k : o.coefficients) v = v * s + k;
    return v;
  };
  int n = 0;
  long double prev = eval(-lim);
  for (int i = 1; i <= samples; ++i) {
    long double v = eval(-lim + 2 * lim * i / samples);
    if ((v < 0) != (prev < 0)) ++n;
    prev = v;
  }
  return n;
}

}  // namespace

TEST(Solver, TwoFullRealizationsOfB) {
  auto full = with_status(b_candidates(), Status::Full);
  ASSERT_EQ(full.size(), 2u);
  std::sort(full.begin(), full.end(), [](auto* a, auto* b) { return a->x < b->x; });
  EXPECT_NEAR(full[0]->x.to_double(), -1.66271, 1e-5);
  EXPECT_NEAR(full[0]->z.to_double(), -5.40326, 1e-4);
  EXPECT_NEAR(full[1]->x.to_double(), 0.518152, 1e-5);
  EXPECT_NEAR(full[1]->z.to_double(), 0.611257, 1e-4);
  for (const auto* c : full) {
    EXPECT_EQ(c->det3, Certification::Zero);
    EXPECT_EQ(c->det4, Certification::Zero);
    EXPECT_EQ(c->ladder.size(), 4u);
    EXPECT_TRUE(known_root_check(*c, 256).pass);
  }
}

TEST(Solver, DegenerateRationalPointsOfB) {
  std::set<std::pair<std::string, std::string>> got;
  for (const auto* c : with_status(b_candidates(), Status::Degenerate)) {
    EXPECT_FALSE(c->witnesses.empty());
    if (c->exact_x) got.insert({c->exact_x->str(), c->exact_z->str()});
  }
  for (auto want : std::vector<std::pair<std::string, std::string>>{{"0", "0"}, {"1/2", "0"}, {"1/2", "2/3"}, {"1", "0"}, {"1", "1"}})
    EXPECT_TRUE(got.count(want)) << want.first << "," << want.second;
}

TEST(Solver, ExactRootsSatisfyTheReducedSystem) {
  ResidualSystem sys(3, b_parameters());
  ASSERT_TRUE(sys.exact());
  for (const auto& c : b_candidates())
    if (c.exact_x) EXPECT_TRUE(sys.is_exact_root(*c.exact_x, *c.exact_z));
  EXPECT_FALSE(sys.is_exact_root({Int(1), Int(3)}, {Int(1), Int(5)}));
}

TEST(Solver, KnownRootPolynomials) {
  EXPECT_EQ(real_root_count(alpha_oracle()), sampled_root_count(alpha_oracle(), 20, 400000));
  EXPECT_EQ(real_root_count(beta_oracle()), sampled_root_count(beta_oracle(), 20, 400000));
  PrecisionScope scope(Precision{256});
  EXPECT_GT(oracle_value(alpha_oracle(), Real("0.3")).to_double(), 1e-6);
}

TEST(Solver, ReducedPrecisionIsUndecided) {
  SolveOptions opt;
  opt.precision = {96};
  auto cands = solve_system(3, b_parameters(), opt);
  EXPECT_TRUE(with_status(cands, Status::Full).empty());
  int undecided = 0;
  for (const auto& c : cands)
    if (c.status == Status::Partial) {
      EXPECT_LT(c.ladder.size(), 3u);
      undecided += c.det3 == Certification::Undecided;
    }
  EXPECT_GT(undecided, 0);
}

TEST(Solver, LadderIsCappedAtFourTimesTheBasePrecision) {
  EXPECT_EQ(detail::ladder_bits(256), (std::vector<int>{128, 256, 512, 1024}));
  EXPECT_EQ(detail::ladder_bits(128), (std::vector<int>{128, 256, 512}));
  EXPECT_EQ(detail::ladder_bits(96), (std::vector<int>{128, 256}));
}

TEST(Solver, SnapRecognisesSmallFractions) {
  auto r = detail::snap(2.0 / 3 + 1e-14, 12, 1e-12);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->str(), "2/3");
  EXPECT_FALSE(detail::snap(0.123456789, 12, 1e-12));
}

TEST(Solver, GRRowHasOnlyDegenerateSolutions) {
  auto cands = solve_system(3, gr_row_parameters());
  EXPECT_EQ(cands.size(), 5u);
  for (const auto& c : cands) EXPECT_EQ(c.status, Status::Degenerate);
}

TEST(Solver, RealizationsAreStrongConfigurations) {
  auto rs = realize(3, b_parameters());
  ASSERT_EQ(rs.size(), 2u);
  auto want = lift(rlg_b_template(3, b_parameters())).graph;
  for (const auto& r : rs) {
    auto rep = check_strong(r.configuration, 1e-30, 1e-6);
    EXPECT_TRUE(rep.ok) << rep.message;
    EXPECT_TRUE(are_isomorphic(extract_levi(r.configuration, 1e-30), want, false));
    EXPECT_EQ(r.configuration.symmetry_order, 3);
  }
}

TEST(Solver, NumericRouteForLargerModulus) {
  SolveOptions opt;
  auto row = scan_spec({Family::F1, 4, 1, 1}, opt);
  EXPECT_TRUE(row.lift.nk.ok);
  ASSERT_GT(row.full, 0);
  for (const auto& r : row.realizations) EXPECT_TRUE(check_strong(r.configuration, 1e-12, 1e-6).ok);
}

TEST(Solver, RejectsTooSmallModulus) { EXPECT_THROW(ResidualSystem(2, b_parameters()), ValidationError); }
