#pragma once
// Parametric scene of the 15-parameter template: every element is a meet,
// a join or an affine combination, driven by the two free reals x and z.

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "projective.hpp"
#include "voltage.hpp"

namespace polycfg {

enum Cls : int { kR, km, kY, kp, kG, kb, kc, kC, kB, kg, ky, kM, kr, kP, kClassCount };

inline const char* class_name(int k) {
  static const char* names[kClassCount] = {"R", "m", "Y", "p", "G", "b", "c", "C", "B", "g", "y", "M", "r", "P"};
  return names[k];
}
inline bool class_is_point(int k) {
  return k == kR || k == kY || k == kG || k == kC || k == kB || k == kM || k == kP;
}
inline int class_index(const std::string& name) {
  for (int k = 0; k < kClassCount; ++k)
    if (name == class_name(k)) return k;
  return -1;
}

template <class T>
struct Scene {
  using B = base_scalar_t<T>;
  int m = 3;
  ParameterVector params{};
  T x{}, z{};
  std::array<std::vector<Vec3<T>>, kClassCount> el;
  B worst_ratio = B(1);  // smallest |u x v| / (|u| |v|) over all constructions
  std::string worst_step;

  const Vec3<T>& at(int cls, long i) const { return el[cls][mod(i, m)]; }
};

namespace detail {

template <class T>
struct SceneBuilder {
  using B = base_scalar_t<T>;
  Scene<T>& s;

  Vec3<T> cross_step(const Vec3<T>& u, const Vec3<T>& v, int cls, int i, int ca, long ia, int cb, long ib) {
    Vec3<T> w = cross(u, v);
    T n = norm(w);
    B ratio = value_of(n);  // inputs are unit vectors
    if (!(ratio == ratio)) ratio = B(0);
    if (ratio < s.worst_ratio) {
      s.worst_ratio = ratio;
      s.worst_step = std::string(class_name(cls)) + "_" + std::to_string(i) + " from " + class_name(ca) + "_" +
                     std::to_string(mod(ia, s.m)) + ", " + class_name(cb) + "_" + std::to_string(mod(ib, s.m));
    }
    return {w.x / n, w.y / n, w.z / n};
  }
};

}  // namespace detail

// Build order R m Y p G b c C B g y M r P. Elements are stored as unit vectors.
template <class T>
Scene<T> build_scene(int m, const ParameterVector& prm, const T& x, const T& z) {
  using B = base_scalar_t<T>;
  Scene<T> s;
  s.m = m;
  s.params = prm;
  s.x = x;
  s.z = z;
  for (auto& v : s.el) v.resize(m);
  detail::SceneBuilder<T> sb{s};
  const auto [a, c, d, e, f, g, q, a2, c2, d2, e2, f2, g2, q2, t] = prm;
  auto& E = s.el;
  auto M = [m](long i) { return mod(i, m); };
  for (int i = 0; i < m; ++i) {
    B th = angle_fraction<B>(i, m);
    using std::cos;
    using std::sin;
    E[kR][i] = unit(Vec3<T>{T(B(2) * cos(th)), T(B(2) * sin(th)), T(1)});
  }
  for (int i = 0; i < m; ++i) E[km][i] = sb.cross_step(E[kR][i], E[kR][M(i + a)], km, i, kR, i, kR, i + a);
  for (int i = 0; i < m; ++i) E[kY][i] = unit(combo(E[kR][M(i - c)], E[kR][M(i - c + a)], x));
  for (int i = 0; i < m; ++i) E[kp][i] = sb.cross_step(E[kY][i], E[kR][i], kp, i, kY, i, kR, i);
  for (int i = 0; i < m; ++i) E[kG][i] = unit(combo(E[kR][i], E[kY][i], z));
  for (int i = 0; i < m; ++i) E[kb][i] = sb.cross_step(E[kY][M(i + e2)], E[kG][i], kb, i, kY, i + e2, kG, i);
  for (int i = 0; i < m; ++i) E[kc][i] = sb.cross_step(E[kY][i], E[kG][M(i + f2)], kc, i, kY, i, kG, i + f2);
  for (int i = 0; i < m; ++i) E[kC][i] = sb.cross_step(E[kb][M(i - g)], E[kb][M(i - t)], kC, i, kb, i - g, kb, i - t);
  for (int i = 0; i < m; ++i) E[kB][i] = sb.cross_step(E[kc][M(i - g2)], E[kc][i], kB, i, kc, i - g2, kc, i);
  for (int i = 0; i < m; ++i) E[kg][i] = sb.cross_step(E[kC][M(i + f)], E[kB][i], kg, i, kC, i + f, kB, i);
  for (int i = 0; i < m; ++i) E[ky][i] = sb.cross_step(E[kC][i], E[kB][M(i + e)], ky, i, kC, i, kB, i + e);
  for (int i = 0; i < m; ++i) E[kM][i] = sb.cross_step(E[ky][M(i - c2)], E[kp][M(i - q2)], kM, i, ky, i - c2, kp, i - q2);
  for (int i = 0; i < m; ++i) E[kr][i] = sb.cross_step(E[kG][M(i + d)], E[kM][i], kr, i, kG, i + d, kM, i);
  for (int i = 0; i < m; ++i) E[kP][i] = sb.cross_step(E[ky][i], E[kg][i], kP, i, ky, i, kg, i);
  return s;
}

// Throws when some construction step had projectively equal inputs.
template <class T>
Scene<T> build_scene_checked(int m, const ParameterVector& prm, const T& x, const T& z) {
  Scene<T> s = build_scene(m, prm, x, z);
  if (!(s.worst_ratio > default_tolerance<base_scalar_t<T>>()))
    throw GeometryError("scene degenerate at step " + s.worst_step);
  return s;
}

template <class T>
struct Residuals {
  T det1, det3, det4, det5;  // signed, on unit representatives (so |value| <= 1)
  T common;                  // 2x^2 z + x^2 - 2xz - x + z
};

template <class T>
inline T common_factor(const T& x, const T& z) {
  return T(2) * x * x * z + x * x - T(2) * x * z - x + z;
}

template <class T>
Residuals<T> residuals(const Scene<T>& s) {
  const auto [a, c, d, e, f, g, q, a2, c2, d2, e2, f2, g2, q2, t] = s.params;
  (void)a, (void)c, (void)e, (void)g, (void)c2, (void)e2, (void)f2, (void)g2, (void)q2, (void)t;
  Residuals<T> r;
  r.det1 = normalized_det(s.at(kR, d2), s.at(kC, f), s.at(kB, 0));
  r.det5 = normalized_det(s.at(kM, 0), s.at(kM, a2), s.at(kG, d));
  r.det3 = normalized_det(s.at(km, -q), s.at(kg, 0), s.at(ky, 0));
  r.det4 = normalized_det(s.at(kr, 0), s.at(kg, 0), s.at(ky, 0));
  r.common = common_factor(s.x, s.z);
  return r;
}

// ---------- exact m = 3 system ----------

// det1 and det5 as integer polynomials for m = 3 in the frame
// R = (2,0,1), (-1,1,1), (-1,-1,1), the image of the radius-2 frame under
// y -> y / sqrt(3). Every vector is made primitive (divided by the gcd of its
// coordinates) so the polynomials carry no spurious factors.
struct ExactSystem {
  BPoly det1, det5;
  BPoly common;  // gcd(det1, det5)
  BPoly reduced1, reduced5;
};

namespace detail {
using PVec = std::array<BPoly, 3>;

inline PVec pcross(const PVec& u, const PVec& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}
inline PVec make_primitive(PVec v) {
  BPoly g = gcd(gcd(v[0], v[1]), v[2]);
  if (g.is_zero()) throw GeometryError("identically degenerate construction");
  for (auto& k : v) k = divexact(k, g);
  return v;
}
inline BPoly pdet(const PVec& u, const PVec& v, const PVec& w) {
  PVec c = pcross(v, w);
  return u[0] * c[0] + u[1] * c[1] + u[2] * c[2];
}
inline PVec pcombo(const PVec& p, const PVec& q, const BPoly& t) {
  BPoly one(1);
  return {(one - t) * p[0] + t * q[0], (one - t) * p[1] + t * q[1], (one - t) * p[2] + t * q[2]};
}
}  // namespace detail

inline ExactSystem exact_system_m3(const ParameterVector& prm) {
  using detail::PVec;
  const int m = 3;
  const auto [a, c, d, e, f, g, q, a2, c2, d2, e2, f2, g2, q2, t] = prm;
  (void)q;
  auto M = [](long i) { return mod(i, 3); };
  auto X = BPoly::x(), Z = BPoly::z();
  std::array<PVec, 3> R = {PVec{BPoly(2), BPoly(0), BPoly(1)}, PVec{BPoly(-1), BPoly(1), BPoly(1)},
                           PVec{BPoly(-1), BPoly(-1), BPoly(1)}};
  std::array<PVec, 3> Y, p, G, b, cc, C, Bp, gg, y, Mp;
  auto J = [](const PVec& u, const PVec& v) { return detail::make_primitive(detail::pcross(u, v)); };
  for (int i = 0; i < m; ++i) Y[i] = detail::pcombo(R[M(i - c)], R[M(i - c + a)], X);
  for (int i = 0; i < m; ++i) p[i] = J(Y[i], R[i]);
  for (int i = 0; i < m; ++i) G[i] = detail::pcombo(R[i], Y[i], Z);
  for (int i = 0; i < m; ++i) b[i] = J(Y[M(i + e2)], G[i]);
  for (int i = 0; i < m; ++i) cc[i] = J(Y[i], G[M(i + f2)]);
  for (int i = 0; i < m; ++i) C[i] = J(b[M(i - g)], b[M(i - t)]);
  for (int i = 0; i < m; ++i) Bp[i] = J(cc[M(i - g2)], cc[i]);
  for (int i = 0; i < m; ++i) gg[i] = J(C[M(i + f)], Bp[i]);
  for (int i = 0; i < m; ++i) y[i] = J(C[i], Bp[M(i + e)]);
  for (int i = 0; i < m; ++i) Mp[i] = J(y[M(i - c2)], p[M(i - q2)]);
  ExactSystem s;
  s.det1 = detail::pdet(R[M(d2)], C[M(f)], Bp[0]);
  s.det5 = detail::pdet(Mp[0], Mp[M(a2)], G[M(d)]);
  s.common = gcd(s.det1, s.det5);
  s.reduced1 = s.common.is_zero() ? s.det1 : divexact(s.det1, s.common);
  s.reduced5 = s.common.is_zero() ? s.det5 : divexact(s.det5, s.common);
  return s;
}

}  // namespace polycfg
