#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"

using namespace polycfg;

namespace {

using V3 = Vec3<double>;
using V2 = Vec2<double>;

HomTriple<double> pt(double x, double y) { return {V3{x, y, 1}, Kind::Point}; }

double angle_between_points(const V3& a, const V3& b) { return projective_distance(a, b); }

}  // namespace

TEST(Real, PrecisionScopeAndParsing) {
  {
    PrecisionScope s(Precision{512});
    Real third = Real(1) / Real(3);
    EXPECT_EQ(third.bits(), 512);
    EXPECT_LT(abs(third * Real(3) - Real(1)).to_double(), 1e-150);
  }
  EXPECT_EQ(working_precision().bits, 256);
  EXPECT_THROW(Real("1.2.3"), std::invalid_argument);
  PrecisionScope s(Precision{128});
  Real x("0.1");
  EXPECT_EQ(x.at_bits(64).bits(), 64);
  EXPECT_NEAR(Real::pi().to_double(), M_PI, 1e-15);
}

TEST(Dual, DerivativesMatchFiniteDifferences) {
  using D = Dual<double>;
  auto f = [](const auto& x, const auto& z) { return sqrt(x * x * z + z / (x + decltype(x)(3))); };
  double x = 0.7, z = 1.3, h = 1e-6;
  auto d = f(D::variable(x, 0), D::variable(z, 1));
  EXPECT_NEAR(d.d0, (f(x + h, z) - f(x - h, z)) / (2 * h), 1e-7);
  EXPECT_NEAR(d.d1, (f(x, z + h) - f(x, z - h)) / (2 * h), 1e-7);
}

TEST(Projective, JoinAndMeet) {
  auto l = join(pt(0, 0), pt(1, 1));
  EXPECT_NEAR(l.v.x + l.v.y, 0, 1e-15);
  EXPECT_NEAR(l.v.z, 0, 1e-15);
  auto k = join(pt(0, 1), pt(1, 0));
  auto p = affine(meet(l, k).v);
  EXPECT_NEAR(p.x, 0.5, 1e-15);
  EXPECT_NEAR(p.y, 0.5, 1e-15);
  EXPECT_THROW(join(pt(1, 2), pt(1, 2)), GeometryError);
  EXPECT_THROW(meet(l, l), GeometryError);
  EXPECT_THROW(join(l, k), GeometryError);
}

TEST(Projective, DeterminantMatchesOracle) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int k = 0; k < 100; ++k) {
    V3 a{u(rng), u(rng), u(rng)}, b{u(rng), u(rng), u(rng)}, c{u(rng), u(rng), u(rng)};
    EXPECT_NEAR(det3(a, b, c), oracle::det({a.x, a.y, a.z}, {b.x, b.y, b.z}, {c.x, c.y, c.z}), 1e-12);
    EXPECT_NEAR(dot(cross(a, b), a), 0, 1e-12);
  }
}

TEST(Projective, EqualityIsScaleInvariant) {
  V3 a{1, 2, 3};
  EXPECT_TRUE(projectively_equal(a, V3{-2, -4, -6}, 1e-12));
  EXPECT_FALSE(projectively_equal(a, V3{1, 2, 3.1}, 1e-12));
  EXPECT_NEAR(angle_between_points(a, V3{3, 6, 9}), 0, 1e-15);
}

TEST(Projective, RotationsActOnPointsAndLinesAlike) {
  auto l = join(pt(2, 0), pt(0, 1));
  auto p = pt(2, 0);
  for (int k = 0; k < 7; ++k) {
    auto rl = rotate(l, k, 7), rp = rotate(p, k, 7);
    EXPECT_NEAR(dot(rl.v, rp.v), 0, 1e-12);
  }
  auto M = reflection_matrix(0.3);
  auto q = transform(M, transform(M, p));
  EXPECT_TRUE(projectively_equal(q.v, p.v, 1e-12));
}

TEST(Circles, InversionPolePolar) {
  CircleData<double> c{V2{1, -1}, 2};
  V2 p{4, 3};
  V2 q = invert_point(c, p);
  EXPECT_NEAR(dist(q, c.center) * dist(p, c.center), 4, 1e-12);
  V2 back = invert_point(c, q);
  EXPECT_NEAR(back.x, p.x, 1e-12);
  EXPECT_NEAR(back.y, p.y, 1e-12);
  auto l = polar(c, p);
  V2 pp = pole(c, l);
  EXPECT_NEAR(pp.x, p.x, 1e-12);
  EXPECT_NEAR(pp.y, p.y, 1e-12);
  // the inverse of a point lies on its polar
  EXPECT_NEAR(signed_distance(l.v, q), 0, 1e-12);
  EXPECT_THROW(polar(c, c.center), GeometryError);
}

TEST(Circles, InvertingACircleThroughTheCentreGivesALine) {
  CircleData<double> c{V2{0, 0}, 1};
  CircleData<double> g{V2{2, 0}, 2};
  auto img = invert_circle(c, g);
  ASSERT_TRUE(std::holds_alternative<HomTriple<double>>(img));
  auto l = std::get<HomTriple<double>>(img).v;
  EXPECT_NEAR(signed_distance(l, V2{0.25, 5}), 0, 1e-12);
  CircleData<double> h{V2{3, 0}, 1};
  auto img2 = std::get<CircleData<double>>(invert_circle(c, h));
  EXPECT_NEAR(img2.center.x, (0.5 + 0.25) / 2, 1e-12);
  EXPECT_NEAR(img2.radius, (0.5 - 0.25) / 2, 1e-12);
}

TEST(Circles, CircumcircleIncircleTangents) {
  auto cc = circumcircle(V2{0, 0}, V2{4, 0}, V2{0, 3});
  EXPECT_NEAR(cc.center.x, 2, 1e-12);
  EXPECT_NEAR(cc.center.y, 1.5, 1e-12);
  EXPECT_NEAR(cc.radius, 2.5, 1e-12);
  auto in = incircle(join(pt(0, 0), pt(4, 0)), join(pt(4, 0), pt(0, 3)), join(pt(0, 3), pt(0, 0)));
  EXPECT_NEAR(in.radius, 1, 1e-12);
  EXPECT_THROW(circumcircle(V2{0, 0}, V2{1, 1}, V2{2, 2}), GeometryError);
  CircleData<double> c{V2{0, 0}, 1};
  auto t = tangents_from(V2{2, 0}, c);
  for (const auto& s : t) {
    EXPECT_NEAR(std::abs(signed_distance(s.line.v, c.center)), 1, 1e-12);
    EXPECT_NEAR(dist(s.touch, c.center), 1, 1e-12);
  }
  EXPECT_LT(t[0].touch.y, 0);
  auto hits = segment_circle(V2{-2, 0}, V2{2, 0}, c);
  ASSERT_EQ(hits.size(), 2u);
  EXPECT_NEAR(hits[0], 0.25, 1e-12);
  EXPECT_NEAR(hits[1], 0.75, 1e-12);
}

TEST(Polynomial, GcdRecoversCommonFactor) {
  auto X = BPoly::x(), Z = BPoly::z();
  BPoly common = BPoly(2) * X * X * Z + X * X - BPoly(2) * X * Z - X + Z;
  BPoly a = common * (X + Z * Z - BPoly(3)), b = common * (X * Z + BPoly(1));
  BPoly g = gcd(a, b);
  EXPECT_EQ(divexact(a, g) * g, a);
  EXPECT_EQ(g.degree_x(), 2);
  EXPECT_EQ(g.degree_z(), 1);
  EXPECT_TRUE(vanishes_at(common, 1, 1, 0, 1));
  EXPECT_TRUE(vanishes_at(common, 0, 1, 0, 1));
  EXPECT_FALSE(vanishes_at(common, 1, 2, 0, 1));
  UPoly u = UPoly::x() * UPoly::x() - UPoly(1), v = UPoly::x() - UPoly(1);
  EXPECT_EQ(gcd(u, v).degree(), 1);
}

TEST(Scene, RotationEquivariance) {
  for (int m : {3, 5, 7}) {
    ParameterVector p = m == 3 ? b_parameters() : family_params({Family::F1, m, 1, 1});
    auto s = build_scene(m, p, 0.37, 0.61);
    for (int cls = 0; cls < kClassCount; ++cls)
      for (int i = 0; i < m; ++i) {
        auto rotated = polycfg::apply(rotation_matrix(angle_fraction<double>(1, m)), s.at(cls, i));
        EXPECT_LT(projective_distance(rotated, s.at(cls, i + 1)), 1e-10)
            << "m " << m << " class " << class_name(cls) << " index " << i;
      }
  }
}

TEST(Scene, DualAndRealAgreeWithDouble) {
  auto p = b_parameters();
  auto d = residuals(build_scene(3, p, 0.41, -0.8));
  PrecisionScope scope(Precision{256});
  auto r = residuals(build_scene(3, p, Real(0.41), Real(-0.8)));
  EXPECT_NEAR(r.det1.to_double(), d.det1, 1e-12);
  EXPECT_NEAR(r.det5.to_double(), d.det5, 1e-12);
  using D = Dual<double>;
  auto dd = residuals(build_scene(3, p, D::variable(0.41, 0), D::variable(-0.8, 1)));
  double h = 1e-6;
  auto plus = residuals(build_scene(3, p, 0.41 + h, -0.8)), minus = residuals(build_scene(3, p, 0.41 - h, -0.8));
  EXPECT_NEAR(dd.det1.d0, (plus.det1 - minus.det1) / (2 * h), 1e-6);
}

TEST(Scene, ExactSystemSharesTheCommonFactor) {
  auto e = exact_system_m3(b_parameters());
  auto X = BPoly::x(), Z = BPoly::z();
  BPoly common = BPoly(2) * X * X * Z + X * X - BPoly(2) * X * Z - X + Z;
  EXPECT_TRUE(divexact(e.common, common) * common == e.common);
  EXPECT_EQ(e.reduced1 * e.common, e.det1);
  EXPECT_EQ(e.reduced5 * e.common, e.det5);
}

TEST(Scene, ExactAndNumericZeroSetsAgree) {
  // numeric det1 vanishes wherever the exact polynomial does
  auto p = b_parameters();
  ResidualSystem sys(3, p);
  auto e = exact_system_m3(p);
  PolyEval f1(e.det1), f5(e.det5);
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-2, 2);
  int compared = 0;
  for (int k = 0; k < 200 && compared < 20; ++k) {
    double x = u(rng), z0 = u(rng);
    // move z onto the zero set of det1 along a line by secant
    double za = z0, zb = z0 + 0.1, fa = f1(x, za), fb = f1(x, zb);
    for (int it = 0; it < 60 && std::abs(fb) > 1e-13 * (1 + std::abs(zb)); ++it) {
      double zc = zb - fb * (zb - za) / (fb - fa);
      za = zb, fa = fb, zb = zc, fb = f1(x, zb);
    }
    if (!(std::abs(fb) < 1e-9) || std::abs(zb) > 5) continue;
    try {
      auto s = build_scene_checked(3, p, x, zb);
      if (s.worst_ratio < 1e-3) continue;
      EXPECT_LT(std::abs(residuals(s).det1), 1e-7) << "x " << x << " z " << zb;
      ++compared;
    } catch (const GeometryError&) {
    }
  }
  EXPECT_GT(compared, 5);
}
