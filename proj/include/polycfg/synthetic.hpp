#pragma once
// Ruler-and-compass construction of the quasi-configuration QC(B), its
// extension, and the search for the position where Y2 and Y'2 coincide.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "configuration.hpp"

namespace polycfg {

struct SyntheticFrame {
  std::array<Vec2<Real>, 3> R;

  // R0 = (sin 120, 1/2), R1 = (sin -120, 1/2), R2 = (0, -1).
  static SyntheticFrame standard(Precision prec = working_precision()) {
    PrecisionScope scope(prec);
    Real s = sin(Real(2) * Real::pi() / Real(3));
    return {{Vec2<Real>{s, Real(0.5)}, Vec2<Real>{-s, Real(0.5)}, Vec2<Real>{Real(0), Real(-1)}}};
  }
  // M01, the midpoint of R0 R1.
  Vec2<Real> midpoint01() const { return {(R[0].x + R[1].x) / Real(2), (R[0].y + R[1].y) / Real(2)}; }
};

struct SyntheticScene {
  Real xpos;
  std::map<std::string, std::array<Vec3<Real>, 3>> el;  // "R", "m", ... indexed 0..2
  Vec2<Real> O, A, M01;
  std::optional<Vec3<Real>> Yp;  // Y'2 = c2 ∩ m0, set by extend_scene
  std::array<Vec2<Real>, 3> U;   // vertices of the triangle of green lines, U_i opposite g_i
  CircleData<Real> omega;        // circle of reciprocity
  CircleData<Real> c_r1or2;      // circle through R1, O, R2
  CircleData<Real> gamma_a;      // circle through Y0, O, R1
  bool extended = false;

  const Vec3<Real>& at(const std::string& cls, int i) const { return el.at(cls)[mod(i, 3)]; }
};

namespace detail {

inline Vec3<Real> rot3(const Vec3<Real>& h, int k) {
  auto M = rotation_matrix(angle_fraction<Real>(k, 3));
  return polycfg::apply(M, h);  // orthogonal, so points and lines transform alike
}
inline std::array<Vec3<Real>, 3> orbit_from(const Vec3<Real>& h, int index) {
  std::array<Vec3<Real>, 3> out;
  for (int k = 0; k < 3; ++k) out[mod(index + k, 3)] = rot3(h, k);
  return out;
}
inline Vec3<Real> meet_affine(const Vec3<Real>& l, const Vec3<Real>& k, const char* what) {
  Vec3<Real> p = cross(l, k);
  if (!(abs(p.z) > default_tolerance<Real>() * max_abs(p))) throw GeometryError(std::string("meet at infinity: ") + what);
  return {p.x / p.z, p.y / p.z, Real(1)};
}
inline Vec2<Real> flat(const Vec3<Real>& p) { return {p.x / p.z, p.y / p.z}; }
inline Real radius_of(const Vec3<Real>& p) {
  Vec2<Real> q = flat(p);
  return sqrt(q.x * q.x + q.y * q.y);
}
inline Real line_distance(const Vec3<Real>& l) { return abs(l.z) / sqrt(l.x * l.x + l.y * l.y); }
inline Real acute_angle(const Vec3<Real>& l, const Vec3<Real>& k) {
  Real c = abs(l.x * k.x + l.y * k.y) / (sqrt(l.x * l.x + l.y * l.y) * sqrt(k.x * k.x + k.y * k.y));
  if (c > Real(1)) c = Real(1);
  return acos(c);
}
inline CircleData<Real> centred(const Real& r) { return {Vec2<Real>{Real(0), Real(0)}, r}; }
inline CircleData<Real> as_circle(const std::variant<CircleData<Real>, HomTriple<Real>>& v, const char* what) {
  if (!std::holds_alternative<CircleData<Real>>(v)) throw GeometryError(std::string("inverse is a line: ") + what);
  return std::get<CircleData<Real>>(v);
}

}  // namespace detail

// Steps 1-11. xpos is the x-coordinate of Y2 on m0, strictly between R1 and M01.
inline SyntheticScene build_qc(const Real& xpos, const SyntheticFrame& frame, Precision prec) {
  PrecisionScope scope(prec);
  using detail::orbit_from;
  SyntheticScene s;
  s.xpos = xpos.at_bits(prec.bits);
  s.O = {Real(0), Real(0)};
  s.M01 = frame.midpoint01();
  Real lo = frame.R[1].x, hi = s.M01.x;
  if (lo > hi) std::swap(lo, hi);
  if (!(s.xpos > lo && s.xpos < hi)) throw ValidationError("Y2 must lie strictly inside the segment R1 M01");
  auto& E = s.el;
  // (1) red triangle and the magenta sides m_i = R_i R_{i+1}
  for (int i = 0; i < 3; ++i) E["R"][i] = lift_point(frame.R[i]);
  for (int i = 0; i < 3; ++i) E["m"][i] = cross(E["R"][i], E["R"][mod(i + 1, 3)]);
  // (2) Y2 on m0 and its rotates
  Vec3<Real> m0 = E["m"][0];
  Real y2 = -(m0.x * s.xpos + m0.z) / m0.y;
  E["Y"] = orbit_from(Vec3<Real>{s.xpos, y2, Real(1)}, 2);
  // (3) p2 = Y2 R2
  E["p"] = orbit_from(cross(E["Y"][2], E["R"][2]), 2);
  // (4) A on segment Y0 Y1 and the circle through R1, O, R2
  s.c_r1or2 = circumcircle(frame.R[1], s.O, frame.R[2]);
  Vec2<Real> y0 = detail::flat(E["Y"][0]), y1 = detail::flat(E["Y"][1]);
  auto hits = segment_circle(y0, y1, s.c_r1or2);
  std::vector<Real> inner;
  for (const auto& h : hits)
    if (h > Real(0) && h < Real(1)) inner.push_back(h);
  if (inner.size() != 1) throw GeometryError("segment Y0Y1 meets C(R1 O R2) in " + std::to_string(inner.size()) + " interior points");
  s.A = y0 + inner[0] * (y1 - y0);
  // (5) g1 = R2 A
  E["g"] = orbit_from(cross(E["R"][2], lift_point(s.A)), 1);
  // (6) P0 = g0 ∩ m2
  E["P"] = orbit_from(detail::meet_affine(E["g"][0], E["m"][2], "P0"), 0);
  // (7) Omega, the midcircle of circum(P) and incircle of the p-trilateral
  auto circP = detail::centred(detail::radius_of(E["P"][0]));
  auto inP = detail::centred(detail::line_distance(E["p"][0]));
  s.omega = midcircle_concentric(circP, inP);
  // (8) r1: tangent from P1 to the inverse of circum(R) making the smaller angle with g1
  auto gamma_r = detail::as_circle(invert_circle(s.omega, detail::centred(detail::radius_of(E["R"][0]))), "gamma_r");
  auto tr = tangents_from(detail::flat(E["P"][1]), gamma_r);
  Real a0 = detail::acute_angle(tr[0].line.v, E["g"][1]), a1 = detail::acute_angle(tr[1].line.v, E["g"][1]);
  if (!(abs(a0 - a1) > default_tolerance<Real>())) throw GeometryError("ambiguous tangent choice for r1");
  E["r"] = orbit_from(a0 < a1 ? tr[0].line.v : tr[1].line.v, 1);
  // (9) G0 = p0 ∩ r2
  E["G"] = orbit_from(detail::meet_affine(E["p"][0], E["r"][2], "G0"), 0);
  // (10) y1: tangent from P1 to the inverse of circum(Y) making the greater angle with g1
  auto gamma_y = detail::as_circle(invert_circle(s.omega, detail::centred(detail::radius_of(E["Y"][0]))), "gamma_y");
  auto ty = tangents_from(detail::flat(E["P"][1]), gamma_y);
  a0 = detail::acute_angle(ty[0].line.v, E["g"][1]);
  a1 = detail::acute_angle(ty[1].line.v, E["g"][1]);
  if (!(abs(a0 - a1) > default_tolerance<Real>())) throw GeometryError("ambiguous tangent choice for y1");
  E["y"] = orbit_from(a0 > a1 ? ty[0].line.v : ty[1].line.v, 1);
  // (11) M0 = p2 ∩ r2
  E["M"] = orbit_from(detail::meet_affine(E["p"][2], E["r"][2], "M0"), 0);

  for (int i = 0; i < 3; ++i)
    s.U[i] = detail::flat(detail::meet_affine(E["g"][mod(i + 1, 3)], E["g"][mod(i + 2, 3)], "U"));
  s.gamma_a = circumcircle(y0, s.O, frame.R[1]);
  return s;
}

// Steps 12-16.
inline SyntheticScene extend_scene(SyntheticScene s, Precision prec) {
  PrecisionScope scope(prec);
  using detail::orbit_from;
  auto& E = s.el;
  // (12) B0 = g0 ∩ y2
  E["B"] = orbit_from(detail::meet_affine(E["g"][0], E["y"][2], "B0"), 0);
  // (13) c0 = B0 B2
  E["c"] = orbit_from(cross(E["B"][0], E["B"][2]), 0);
  // (14) b1: tangent from Y2 to the inverse of circum(B) touching beyond p2 as seen from O
  auto gamma_b = detail::as_circle(invert_circle(s.omega, detail::centred(detail::radius_of(E["B"][0]))), "gamma_b");
  auto tb = tangents_from(detail::flat(E["Y"][2]), gamma_b);
  Real so = signed_distance(E["p"][2], s.O);
  std::vector<int> pick;
  for (int k = 0; k < 2; ++k) {
    Real st = signed_distance(E["p"][2], tb[k].touch);
    if ((st > Real(0) && so < Real(0)) || (st < Real(0) && so > Real(0))) pick.push_back(k);
  }
  if (pick.size() != 1) throw GeometryError("side-of-p2 rule selects " + std::to_string(pick.size()) + " tangents for b1");
  E["b"] = orbit_from(tb[pick[0]].line.v, 1);
  // (15) C0 = b0 ∩ b1
  E["C"] = orbit_from(detail::meet_affine(E["b"][0], E["b"][1], "C0"), 0);
  // (16) Y'2 on m0
  s.Yp = detail::meet_affine(E["c"][2], E["m"][0], "Y'2");
  s.extended = true;
  return s;
}

// Signed separation of Y'2 from Y2 along m0, oriented from R1 towards R0.
inline Real gap(const SyntheticScene& s) {
  if (!s.Yp) throw ValidationError("scene not extended");
  const auto& R0 = s.at("R", 0);
  const auto& R1 = s.at("R", 1);
  Real dx = R0.x - R1.x, dy = R0.y - R1.y, n = sqrt(dx * dx + dy * dy);
  const auto& Y = s.at("Y", 2);
  return ((s.Yp->x - Y.x) * dx + (s.Yp->y - Y.y) * dy) / n;
}

inline std::optional<Real> gap_at(const Real& xpos, const SyntheticFrame& frame, Precision prec) {
  try {
    return gap(extend_scene(build_qc(xpos, frame, prec), prec));
  } catch (const GeometryError&) {
    return std::nullopt;
  }
}

// QC(B): points R Y G M P, lines m p g r y, with the incidences of the template
// among them.
inline IncidenceStructure qc_structure(const ParameterVector& b_params) {
  static const std::string qp = "RYGMP", ql = "mpgry";
  auto full = lift(rlg_b_template(3, b_params)).structure;
  IncidenceStructure s;
  for (const auto& p : full.points)
    if (qp.find(p.cls) != std::string::npos) s.points.push_back(p);
  for (const auto& l : full.lines)
    if (ql.find(l.cls) != std::string::npos) s.lines.push_back(l);
  for (const auto& [p, l] : full.incidences)
    if (qp.find(p.cls) != std::string::npos && ql.find(l.cls) != std::string::npos) s.incidences.push_back({p, l});
  return s;
}

inline GeometricConfiguration configuration_from_synthetic(const SyntheticScene& s, const IncidenceStructure& inc, int bits) {
  GeometricConfiguration cfg;
  cfg.name = "synthetic";
  cfg.m = 3;
  cfg.bits = bits;
  for (const auto& p : inc.points) {
    cfg.point_labels.push_back(p);
    cfg.points.push_back(s.at(p.cls, p.index));
  }
  for (const auto& l : inc.lines) {
    cfg.line_labels.push_back(l);
    cfg.lines.push_back(s.at(l.cls, l.index));
  }
  attach_incidences(cfg, inc);
  return cfg;
}

struct ProbeScan {
  std::vector<Real> xpos;
  std::vector<std::optional<Real>> gaps;
};

// Probes at the midpoints of 64 equal cells of the open interval.
inline ProbeScan scan_gap(const SyntheticFrame& frame, Precision prec, int probes = 64) {
  PrecisionScope scope(prec);
  ProbeScan scan;
  Real lo = frame.R[1].x, hi = frame.midpoint01().x;
  for (int k = 0; k < probes; ++k) {
    Real x = lo + (hi - lo) * (Real(k) + Real(0.5)) / Real(probes);
    scan.xpos.push_back(x);
    scan.gaps.push_back(gap_at(x, frame, prec));
  }
  return scan;
}

struct SyntheticResult {
  Real xpos;
  Real gap;
  SyntheticScene scene;
  GeometricConfiguration configuration;
};

// Bisection on the first bracket of the probe scan where the gap is continuous,
// then secant steps until |gap| < 2^-(bits/2).
inline SyntheticResult bisect_realize(const SyntheticFrame& frame, const ParameterVector& b_params, Precision prec) {
  PrecisionScope scope(prec);
  auto scan = scan_gap(frame, prec);
  const Real tol = pow2<Real>(-prec.bits / 2);
  for (std::size_t k = 0; k + 1 < scan.xpos.size(); ++k) {
    if (!scan.gaps[k] || !scan.gaps[k + 1]) continue;
    Real ga = *scan.gaps[k], gb = *scan.gaps[k + 1];
    if ((ga > Real(0)) == (gb > Real(0))) continue;
    Real a = scan.xpos[k], b = scan.xpos[k + 1];
    Real bound = abs(ga) > abs(gb) ? abs(ga) : abs(gb);
    bool pole = false;
    for (int it = 0; it < prec.bits && !pole; ++it) {
      Real mid = (a + b) / Real(2);
      auto gm = gap_at(mid, frame, prec);
      if (!gm || abs(*gm) > bound) {
        pole = true;  // the gap blows up inside the bracket
        break;
      }
      if ((*gm > Real(0)) == (ga > Real(0))) a = mid, ga = *gm;
      else b = mid, gb = *gm;
      if (abs(*gm) < tol * Real(1e6)) break;
    }
    if (pole) continue;
    Real x0 = a, x1 = b, g0 = ga, g1 = gb;
    for (int it = 0; it < 60 && !(abs(g1) < tol); ++it) {
      if (g1 == g0) break;
      Real x2 = x1 - g1 * (x1 - x0) / (g1 - g0);
      auto g2 = gap_at(x2, frame, prec);
      if (!g2) break;
      x0 = x1, g0 = g1, x1 = x2, g1 = *g2;
    }
    if (!(abs(g1) < tol)) continue;
    SyntheticResult r;
    r.xpos = x1;
    r.gap = g1;
    r.scene = extend_scene(build_qc(x1, frame, prec), prec);
    auto inc = lift(rlg_b_template(3, b_params)).structure;
    r.configuration = configuration_from_synthetic(r.scene, inc, prec.bits);
    auto rep = check_strong(r.configuration, std::ldexp(1.0, -std::min(prec.bits / 2, 1000)),
                            std::ldexp(1.0, -std::min(prec.bits / 4, 1000)));
    if (!rep.ok) throw GeometryError("synthetic realization is not strong: " + rep.message);
    r.configuration.max_incidence_residual = rep.max_incidence_residual;
    r.configuration.min_point_separation = rep.min_point_separation;
    r.configuration.min_line_separation = rep.min_line_separation;
    return r;
  }
  throw GeometryError("no coincidence bracketed");
}

}  // namespace polycfg
