#pragma once
// Homogeneous coordinates, meets and joins, and circle geometry.

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "dual.hpp"
#include "incidence.hpp"
#include "real.hpp"

namespace polycfg {

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T>
struct Vec3 {
  T x{}, y{}, z{};

  T& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  const T& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(const T& s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
  friend Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
};

template <class T>
struct Vec2 {
  T x{}, y{};
  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(const T& s, const Vec2& a) { return {s * a.x, s * a.y}; }
};

template <class T>
inline Vec3<T> cross(const Vec3<T>& u, const Vec3<T>& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}
template <class T>
inline T dot(const Vec3<T>& u, const Vec3<T>& v) {
  return u.x * v.x + u.y * v.y + u.z * v.z;
}
template <class T>
inline T norm(const Vec3<T>& u) {
  using std::sqrt;
  return sqrt(dot(u, u));
}
template <class T>
inline T det3(const Vec3<T>& u, const Vec3<T>& v, const Vec3<T>& w) {
  return dot(u, cross(v, w));
}
template <class T>
inline Vec3<T> unit(const Vec3<T>& u) {
  T n = norm(u);
  return {u.x / n, u.y / n, u.z / n};
}
template <class T>
inline T max_abs(const Vec3<T>& u) {
  using std::abs;
  T m = abs(u.x);
  if (abs(u.y) > m) m = abs(u.y);
  if (abs(u.z) > m) m = abs(u.z);
  return m;
}

template <class T>
inline Vec3<T> point(const T& x, const T& y) {
  return {x, y, T(1)};
}
template <class T>
inline Vec2<T> affine(const Vec3<T>& p) {
  using std::abs;
  if (abs(p.z) <= pow2<T>(-working_precision().bits / 2) * max_abs(p))
    throw GeometryError("point at infinity has no affine normalization");
  return {p.x / p.z, p.y / p.z};
}
template <class T>
inline Vec3<T> lift_point(const Vec2<T>& p) {
  return {p.x, p.y, T(1)};
}

// The single degeneracy knob: 2^-(bits/2) at the working precision.
template <class T>
inline T default_tolerance() {
  if constexpr (std::is_same_v<base_scalar_t<T>, double>) return T(std::ldexp(1.0, -26));
  else return T(pow2<Real>(-working_precision().bits / 2));
}

template <class T>
struct HomTriple {
  Vec3<T> v;
  Kind kind = Kind::Point;
};

// Sine of the angle between two representatives; zero iff projectively equal.
template <class T>
inline T projective_distance(const Vec3<T>& a, const Vec3<T>& b) {
  return norm(cross(a, b)) / (norm(a) * norm(b));
}

// Normalizes both by the largest-magnitude coordinate of `a` and compares.
template <class T>
inline bool projectively_equal(const Vec3<T>& a, const Vec3<T>& b, const T& tol) {
  using std::abs;
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (abs(a[i]) > abs(a[k])) k = i;
  if (abs(b[k]) <= tol * max_abs(b)) return false;
  for (int i = 0; i < 3; ++i)
    if (abs(a[i] / a[k] - b[i] / b[k]) > tol) return false;
  return true;
}

template <class T>
inline Vec3<T> join_checked(const Vec3<T>& p, const Vec3<T>& q, const char* what) {
  Vec3<T> l = cross(p, q);
  if (norm(l) <= default_tolerance<T>() * norm(p) * norm(q)) throw GeometryError(std::string("degenerate ") + what);
  return l;
}

template <class T>
inline HomTriple<T> join(const HomTriple<T>& p, const HomTriple<T>& q) {
  if (p.kind != Kind::Point || q.kind != Kind::Point) throw GeometryError("join expects two points");
  return {join_checked(p.v, q.v, "join"), Kind::Line};
}
template <class T>
inline HomTriple<T> meet(const HomTriple<T>& l, const HomTriple<T>& k) {
  if (l.kind != Kind::Line || k.kind != Kind::Line) throw GeometryError("meet expects two lines");
  return {join_checked(l.v, k.v, "meet"), Kind::Point};
}

template <class T>
struct Determinant {
  T value;
  T normalized;  // |det| / (|u| |v| |w|), at most 1
};

template <class T>
inline Determinant<T> det3x3(const HomTriple<T>& u, const HomTriple<T>& v, const HomTriple<T>& w) {
  if (u.kind != v.kind || v.kind != w.kind) throw GeometryError("determinant of mixed kinds");
  using std::abs;
  T d = det3(u.v, v.v, w.v);
  return {d, abs(d) / (norm(u.v) * norm(v.v) * norm(w.v))};
}
template <class T>
inline T normalized_det(const Vec3<T>& u, const Vec3<T>& v, const Vec3<T>& w) {
  return det3(u, v, w) / (norm(u) * norm(v) * norm(w));
}

// (1-x) p + x q on affine representatives.
template <class T>
inline Vec3<T> combo(const Vec3<T>& p, const Vec3<T>& q, const T& x) {
  using std::abs;
  if (abs(p.z) <= default_tolerance<T>() * max_abs(p) || abs(q.z) <= default_tolerance<T>() * max_abs(q))
    throw GeometryError("combo of a point at infinity");
  T one(1);
  return {(one - x) * (p.x / p.z) + x * (q.x / q.z), (one - x) * (p.y / p.z) + x * (q.y / q.z), one};
}

template <class T>
inline HomTriple<T> combo(const HomTriple<T>& p, const HomTriple<T>& q, const T& x) {
  if (p.kind != Kind::Point || q.kind != Kind::Point) throw GeometryError("combo expects points");
  return {combo(p.v, q.v, x), Kind::Point};
}

template <class T>
using Mat3 = std::array<std::array<T, 3>, 3>;

template <class T>
inline Vec3<T> apply(const Mat3<T>& M, const Vec3<T>& v) {
  return {M[0][0] * v.x + M[0][1] * v.y + M[0][2] * v.z, M[1][0] * v.x + M[1][1] * v.y + M[1][2] * v.z,
          M[2][0] * v.x + M[2][1] * v.y + M[2][2] * v.z};
}

template <class T>
inline Mat3<T> inverse_transpose(const Mat3<T>& M) {
  // cofactor matrix divided by the determinant
  Mat3<T> C;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      C[i][j] = M[i1][j1] * M[i2][j2] - M[i1][j2] * M[i2][j1];
    }
  T det = M[0][0] * C[0][0] + M[0][1] * C[0][1] + M[0][2] * C[0][2];
  for (auto& row : C)
    for (auto& c : row) c = c / det;
  return C;
}

// Points map by M, lines by its inverse transpose, so incidence is preserved.
template <class T>
inline HomTriple<T> transform(const Mat3<T>& M, const HomTriple<T>& h) {
  return {polycfg::apply(h.kind == Kind::Point ? M : inverse_transpose(M), h.v), h.kind};
}

template <class T>
inline Mat3<T> rotation_matrix(const T& angle) {
  using std::cos;
  using std::sin;
  T c = cos(angle), s = sin(angle);
  return {{{c, -s, T(0)}, {s, c, T(0)}, {T(0), T(0), T(1)}}};
}

// Reflection in the line through the origin at angle phi.
template <class T>
inline Mat3<T> reflection_matrix(const T& phi) {
  using std::cos;
  using std::sin;
  T c = cos(2 * phi), s = sin(2 * phi);
  return {{{c, s, T(0)}, {s, -c, T(0)}, {T(0), T(0), T(1)}}};
}

template <class T>
inline T angle_fraction(long k, long m) {
  return T(2) * pi_value<T>() * T(static_cast<int>(k)) / T(static_cast<int>(m));
}

// Rotation about the origin by 2 pi k / m.
template <class T>
inline HomTriple<T> rotate(const HomTriple<T>& h, long k, long m) {
  return transform(rotation_matrix(angle_fraction<T>(k, m)), h);
}

// ---------- circles ----------

template <class T>
struct CircleData {
  Vec2<T> center;
  T radius;
};

template <class T>
inline T dist(const Vec2<T>& a, const Vec2<T>& b) {
  using std::sqrt;
  Vec2<T> d = a - b;
  return sqrt(d.x * d.x + d.y * d.y);
}

template <class T>
inline Vec2<T> invert_point(const CircleData<T>& c, const Vec2<T>& p) {
  Vec2<T> d = p - c.center;
  T n2 = d.x * d.x + d.y * d.y;
  if (n2 <= default_tolerance<T>() * default_tolerance<T>() * c.radius * c.radius)
    throw GeometryError("center has no inverse");
  return c.center + (c.radius * c.radius / n2) * d;
}

// Image of a circle; circles through the center go to lines.
template <class T>
inline std::variant<CircleData<T>, HomTriple<T>> invert_circle(const CircleData<T>& c, const CircleData<T>& g) {
  using std::abs;
  T d = dist(g.center, c.center);
  T tol = default_tolerance<T>();
  if (abs(d - g.radius) <= tol * (T(1) + g.radius)) {
    // the image is the line through the inverse of the antipode, perpendicular to the center line
    Vec2<T> u = (T(1) / d) * (g.center - c.center);
    Vec2<T> far = c.center + (T(2) * g.radius) * u;
    Vec2<T> img = invert_point(c, far);
    // normal u through img
    return HomTriple<T>{{u.x, u.y, -(u.x * img.x + u.y * img.y)}, Kind::Line};
  }
  if (d <= tol * (T(1) + g.radius)) return CircleData<T>{c.center, c.radius * c.radius / g.radius};
  Vec2<T> u = (T(1) / d) * (g.center - c.center);
  T k = c.radius * c.radius;
  T s1 = k / (d - g.radius), s2 = k / (d + g.radius);  // signed distances along u
  return CircleData<T>{c.center + ((s1 + s2) / T(2)) * u, abs(s1 - s2) / T(2)};
}

template <class T>
inline CircleData<T> midcircle_concentric(const CircleData<T>& g1, const CircleData<T>& g2) {
  using std::sqrt;
  if (dist(g1.center, g2.center) > default_tolerance<T>() * (T(1) + g1.radius + g2.radius))
    throw GeometryError("midcircle of non-concentric circles is out of scope");
  return {g1.center, sqrt(g1.radius * g2.radius)};
}

template <class T>
inline CircleData<T> circumcircle(const Vec2<T>& p, const Vec2<T>& q, const Vec2<T>& r) {
  using std::abs;
  T ax = q.x - p.x, ay = q.y - p.y, bx = r.x - p.x, by = r.y - p.y;
  T D = T(2) * (ax * by - ay * bx);
  T scale = (abs(ax) + abs(ay)) * (abs(bx) + abs(by));
  if (abs(D) <= default_tolerance<T>() * scale) throw GeometryError("circumcircle of collinear points");
  T a2 = ax * ax + ay * ay, b2 = bx * bx + by * by;
  Vec2<T> c{p.x + (by * a2 - ay * b2) / D, p.y + (ax * b2 - bx * a2) / D};
  return {c, dist(c, p)};
}

// Signed distance of an affine point from a line (a, b, c).
template <class T>
inline T signed_distance(const Vec3<T>& l, const Vec2<T>& p) {
  using std::sqrt;
  return (l.x * p.x + l.y * p.y + l.z) / sqrt(l.x * l.x + l.y * l.y);
}

template <class T>
inline CircleData<T> incircle(const HomTriple<T>& l, const HomTriple<T>& k, const HomTriple<T>& n) {
  using std::abs;
  T tol = default_tolerance<T>();
  if (abs(normalized_det(l.v, k.v, n.v)) <= tol) throw GeometryError("incircle of concurrent lines");
  Vec2<T> A = affine(cross(k.v, n.v)), B = affine(cross(n.v, l.v)), C = affine(cross(l.v, k.v));
  T a = dist(B, C), b = dist(C, A), c = dist(A, B);
  T s = a + b + c;
  Vec2<T> I{(a * A.x + b * B.x + c * C.x) / s, (a * A.y + b * B.y + c * C.y) / s};
  return {I, abs(signed_distance(l.v, I))};
}

template <class T>
struct Tangent {
  HomTriple<T> line;
  Vec2<T> touch;
};

// The two tangents from p, ordered by signed angle from the direction p -> center
// (counterclockwise first).
template <class T>
inline std::array<Tangent<T>, 2> tangents_from(const Vec2<T>& p, const CircleData<T>& c) {
  using std::acos;
  using std::atan2;
  using std::cos;
  using std::sin;
  T d = dist(p, c.center);
  if (d <= c.radius * (T(1) + default_tolerance<T>())) throw GeometryError("tangent from a point not outside the circle");
  T phi = atan2(p.y - c.center.y, p.x - c.center.x);
  T alpha = acos(c.radius / d);
  std::array<Tangent<T>, 2> out;
  // the touch point at phi - alpha is seen counterclockwise from p
  for (int k = 0; k < 2; ++k) {
    T th = k == 0 ? phi - alpha : phi + alpha;
    Vec2<T> t{c.center.x + c.radius * cos(th), c.center.y + c.radius * sin(th)};
    out[k] = {{cross(lift_point(p), lift_point(t)), Kind::Line}, t};
  }
  return out;
}

// Points where the segment p + s (q - p), 0 <= s <= 1, meets the circle; parameters ascending.
template <class T>
inline std::vector<T> segment_circle(const Vec2<T>& p, const Vec2<T>& q, const CircleData<T>& c) {
  using std::sqrt;
  Vec2<T> d = q - p, f = p - c.center;
  T A = d.x * d.x + d.y * d.y;
  T B = T(2) * (d.x * f.x + d.y * f.y);
  T C = f.x * f.x + f.y * f.y - c.radius * c.radius;
  T disc = B * B - T(4) * A * C;
  std::vector<T> out;
  if (disc < T(0)) return out;
  T r = sqrt(disc);
  for (T s : {(-B - r) / (T(2) * A), (-B + r) / (T(2) * A)})
    if (s >= T(0) && s <= T(1)) out.push_back(s);
  return out;
}

template <class T>
inline HomTriple<T> polar(const CircleData<T>& c, const Vec2<T>& p) {
  Vec2<T> d = p - c.center;
  if (dist(p, c.center) <= default_tolerance<T>() * c.radius) throw GeometryError("polar of the center");
  return {{d.x, d.y, -(d.x * c.center.x + d.y * c.center.y + c.radius * c.radius)}, Kind::Line};
}

template <class T>
inline Vec2<T> pole(const CircleData<T>& c, const HomTriple<T>& l) {
  using std::abs;
  using std::sqrt;
  T w = l.v.x * c.center.x + l.v.y * c.center.y + l.v.z;
  if (abs(w) <= default_tolerance<T>() * c.radius * sqrt(l.v.x * l.v.x + l.v.y * l.v.y))
    throw GeometryError("pole of a line through the center");
  T lambda = -c.radius * c.radius / w;
  return {c.center.x + lambda * l.v.x, c.center.y + lambda * l.v.y};
}

}  // namespace polycfg
