#pragma once
// Isometry group, self-reciprocity and similarity alignment of
// configurations centred at the origin. Work is done in double.

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "configuration.hpp"

namespace polycfg {

namespace detail {

struct Flat {
  std::vector<std::array<double, 2>> pts;
  std::vector<std::array<double, 3>> lines;  // a^2 + b^2 = 1
  double scale = 1;
};

inline std::array<double, 3> unit_line(double a, double b, double c) {
  double n = std::hypot(a, b);
  if (n == 0) return {0, 0, 1};
  return {a / n, b / n, c / n};
}

inline Flat flatten(const GeometricConfiguration& cfg) {
  Flat f;
  for (const auto& p : cfg.points) {
    double z = p.z.to_double();
    f.pts.push_back({p.x.to_double() / z, p.y.to_double() / z});
  }
  for (const auto& l : cfg.lines) f.lines.push_back(unit_line(l.x.to_double(), l.y.to_double(), l.z.to_double()));
  double s = 0;
  for (const auto& p : f.pts) s = std::max(s, std::hypot(p[0], p[1]));
  f.scale = s > 0 ? s : 1;
  return f;
}

// Orthogonal map of the plane: rotation by theta, or reflection in the axis at angle phi.
struct Isometry {
  bool reflection = false;
  double angle = 0;

  std::array<double, 2> apply(const std::array<double, 2>& p) const {
    if (!reflection) {
      double c = std::cos(angle), s = std::sin(angle);
      return {c * p[0] - s * p[1], s * p[0] + c * p[1]};
    }
    double c = std::cos(2 * angle), s = std::sin(2 * angle);
    return {c * p[0] + s * p[1], s * p[0] - c * p[1]};
  }
  std::array<double, 3> apply(const std::array<double, 3>& l) const {
    auto n = apply(std::array<double, 2>{l[0], l[1]});
    return {n[0], n[1], l[2]};
  }
};

inline int match_point(const std::vector<std::array<double, 2>>& set, const std::array<double, 2>& p, double tol) {
  for (std::size_t i = 0; i < set.size(); ++i)
    if (std::hypot(set[i][0] - p[0], set[i][1] - p[1]) < tol) return static_cast<int>(i);
  return -1;
}

inline int match_line(const std::vector<std::array<double, 3>>& set, const std::array<double, 3>& l, double tol) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto& k = set[i];
    double plus = std::abs(k[0] - l[0]) + std::abs(k[1] - l[1]) + std::abs(k[2] - l[2]);
    double minus = std::abs(k[0] + l[0]) + std::abs(k[1] + l[1]) + std::abs(k[2] + l[2]);
    if (std::min(plus, minus) < tol) return static_cast<int>(i);
  }
  return -1;
}

inline bool preserves(const Flat& f, const Isometry& t, double tol) {
  for (const auto& p : f.pts)
    if (match_point(f.pts, t.apply(p), tol * f.scale) < 0) return false;
  for (const auto& l : f.lines)
    if (match_line(f.lines, t.apply(l), tol * std::max(1.0, std::abs(l[2]))) < 0) return false;
  return true;
}

// Candidate mirror angles: bisectors between a reference point and every
// point at the same distance from the origin.
inline std::vector<double> mirror_candidates(const Flat& f, double tol) {
  std::vector<double> out;
  int ref = -1;
  double best = 0;
  for (std::size_t i = 0; i < f.pts.size(); ++i) {
    double r = std::hypot(f.pts[i][0], f.pts[i][1]);
    if (r > best) best = r, ref = static_cast<int>(i);
  }
  if (ref < 0) return out;
  double th0 = std::atan2(f.pts[ref][1], f.pts[ref][0]);
  for (const auto& q : f.pts) {
    if (std::abs(std::hypot(q[0], q[1]) - best) > tol * f.scale) continue;
    double phi = std::remainder((th0 + std::atan2(q[1], q[0])) / 2, M_PI);
    bool seen = false;
    for (double o : out)
      if (std::abs(std::remainder(o - phi, M_PI)) < 1e-9) seen = true;
    if (!seen) out.push_back(phi);
  }
  return out;
}

}  // namespace detail

struct SymmetryReport {
  int rotations = 1;  // order of the rotation subgroup
  int reflections = 0;
  std::vector<double> mirror_angles;
  int order() const { return rotations + reflections; }
};

// Isometries about the origin mapping the point set and the line set to themselves.
inline SymmetryReport geometric_symmetries(const GeometricConfiguration& cfg, double tol = 1e-8) {
  SymmetryReport r;
  auto f = detail::flatten(cfg);
  int n = static_cast<int>(std::max(f.pts.size(), f.lines.size()));
  for (int k = n; k >= 2; --k)
    if (detail::preserves(f, {false, 2 * M_PI / k}, tol)) {
      r.rotations = k;
      break;
    }
  for (double phi : detail::mirror_candidates(f, tol))
    if (detail::preserves(f, {true, phi}, tol)) r.mirror_angles.push_back(phi);
  r.reflections = static_cast<int>(r.mirror_angles.size());
  return r;
}

enum class ReciprocityKind { None, Perfect, Rotational, Reflexible };

inline const char* to_string(ReciprocityKind k) {
  switch (k) {
    case ReciprocityKind::Perfect: return "perfect";
    case ReciprocityKind::Rotational: return "rotational";
    case ReciprocityKind::Reflexible: return "reflexible";
    default: return "none";
  }
}

struct Reciprocation {
  ReciprocityKind kind = ReciprocityKind::None;
  double omega = 0;      // radius of the reciprocity circle
  double angle = 0;      // rotation angle, or mirror angle for reflections
  std::vector<int> point_to_line;  // P -> the configuration line equal to T(polar(P))
  std::vector<int> line_to_point;  // l -> the configuration point equal to T(pole(l))
};

struct SelfReciprocityReport {
  ReciprocityKind best = ReciprocityKind::None;
  std::vector<Reciprocation> found;
  bool self_reciprocal() const { return best != ReciprocityKind::None; }
};

// Reciprocation in a circle of radius w about the origin sends (px, py) to the
// line px X + py Y = w^2. Radii are tried as w^2 = rho * delta over every
// point-orbit radius rho and line distance delta, then composed with the
// identity, rotations and reflections that align one reciprocal point.
inline SelfReciprocityReport self_reciprocity_check(const GeometricConfiguration& cfg, double tol = 1e-8) {
  SelfReciprocityReport rep;
  auto f = detail::flatten(cfg);
  if (f.pts.empty() || f.lines.empty()) return rep;
  auto uniq = [&](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v)
      if (out.empty() || x - out.back() > tol * f.scale) out.push_back(x);
    return out;
  };
  std::vector<double> radii, dists;
  for (const auto& p : f.pts) radii.push_back(std::hypot(p[0], p[1]));
  for (const auto& l : f.lines) dists.push_back(std::abs(l[2]));
  radii = uniq(radii);
  dists = uniq(dists);

  std::vector<double> omegas;
  for (double r : radii)
    for (double d : dists)
      if (r > tol && d > tol) omegas.push_back(std::sqrt(r * d));
  omegas = uniq(omegas);

  for (double w : omegas) {
    double w2 = w * w;
    std::vector<std::array<double, 3>> polars;
    std::vector<std::array<double, 2>> poles;
    for (const auto& p : f.pts) polars.push_back(detail::unit_line(p[0], p[1], -w2));
    bool finite = true;
    for (const auto& l : f.lines) {
      if (std::abs(l[2]) < tol) finite = false;
      poles.push_back({-l[0] * w2 / l[2], -l[1] * w2 / l[2]});
    }
    if (!finite) continue;
    std::vector<detail::Isometry> cands = {{false, 0}};
    double rr = std::hypot(poles[0][0], poles[0][1]);
    double th = std::atan2(poles[0][1], poles[0][0]);
    for (const auto& q : f.pts) {
      if (std::abs(std::hypot(q[0], q[1]) - rr) > 1e-6 * f.scale) continue;
      double tq = std::atan2(q[1], q[0]);
      cands.push_back({false, tq - th});
      cands.push_back({true, (tq + th) / 2});
    }
    for (const auto& t : cands) {
      Reciprocation rc;
      bool ok = true;
      for (const auto& l : polars) {
        int j = detail::match_line(f.lines, t.apply(l), tol * std::max(1.0, std::abs(l[2])));
        if (j < 0) { ok = false; break; }
        rc.point_to_line.push_back(j);
      }
      if (!ok) continue;
      for (const auto& p : poles) {
        int j = detail::match_point(f.pts, t.apply(p), tol * f.scale);
        if (j < 0) { ok = false; break; }
        rc.line_to_point.push_back(j);
      }
      if (!ok) continue;
      double a = std::remainder(t.angle, 2 * M_PI);
      rc.kind = t.reflection ? ReciprocityKind::Reflexible
                             : (std::abs(a) < 1e-9 ? ReciprocityKind::Perfect : ReciprocityKind::Rotational);
      rc.omega = w;
      rc.angle = t.reflection ? std::remainder(t.angle, M_PI) : a;
      bool dup = false;
      for (const auto& o : rep.found)
        if (o.point_to_line == rc.point_to_line && o.line_to_point == rc.line_to_point) dup = true;
      if (dup) continue;
      rep.found.push_back(rc);
    }
  }
  auto rank = [](ReciprocityKind k) {
    switch (k) {
      case ReciprocityKind::Perfect: return 3;
      case ReciprocityKind::Rotational: return 2;
      case ReciprocityKind::Reflexible: return 1;
      default: return 0;
    }
  };
  for (const auto& r : rep.found)
    if (rank(r.kind) > rank(rep.best)) rep.best = r.kind;
  return rep;
}

// Similarity alignment of matched point lists (Umeyama), reflections allowed.
struct ProcrustesResult {
  double residual = INFINITY;  // rms misfit relative to the rms spread of the target
  double scale = 1;
  double angle = 0;
  bool reflection = false;
};

inline ProcrustesResult procrustes(const std::vector<std::array<double, 2>>& src,
                                   const std::vector<std::array<double, 2>>& dst) {
  using C = std::complex<double>;
  ProcrustesResult best;
  const std::size_t n = src.size();
  if (n == 0 || n != dst.size()) return best;
  for (int refl = 0; refl < 2; ++refl) {
    std::vector<C> a(n), b(n);
    C ma = 0, mb = 0;
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = refl ? C(src[i][0], -src[i][1]) : C(src[i][0], src[i][1]);
      b[i] = C(dst[i][0], dst[i][1]);
      ma += a[i];
      mb += b[i];
    }
    ma /= double(n);
    mb /= double(n);
    C num = 0;
    double den = 0, spread = 0;
    for (std::size_t i = 0; i < n; ++i) {
      num += std::conj(a[i] - ma) * (b[i] - mb);
      den += std::norm(a[i] - ma);
      spread += std::norm(b[i] - mb);
    }
    C k = num / den;  // scale times rotation
    double err = 0;
    for (std::size_t i = 0; i < n; ++i) err += std::norm(k * (a[i] - ma) + mb - b[i]);
    double res = std::sqrt(err / spread);
    if (res < best.residual) {
      best.residual = res;
      best.scale = std::abs(k);
      best.angle = std::arg(k);
      best.reflection = refl;
    }
  }
  return best;
}

// Points of two configurations matched by label.
inline ProcrustesResult align(const GeometricConfiguration& from, const GeometricConfiguration& to) {
  std::vector<std::array<double, 2>> a, b;
  auto fa = detail::flatten(from), fb = detail::flatten(to);
  for (std::size_t i = 0; i < from.point_labels.size(); ++i) {
    int j = to.find_point(from.point_labels[i]);
    if (j < 0) continue;
    a.push_back(fa.pts[i]);
    b.push_back(fb.pts[j]);
  }
  return procrustes(a, b);
}

}  // namespace polycfg
