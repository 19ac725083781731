#pragma once
// Celestial configurations m#(s1,t1; s2,t2; s3,t3): three concentric rings of
// m points. Lines of class k join ring-k points at span s_k and meet ring k+1
// in a pair at span t_k.

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <vector>

#include "solver.hpp"

namespace polycfg {

struct CelestialSymbol {
  int m = 7;
  std::array<int, 3> s{}, t{};

  std::string str() const {
    std::string out = std::to_string(m) + "#(";
    for (int k = 0; k < 3; ++k)
      out += std::to_string(s[k]) + "," + std::to_string(t[k]) + (k < 2 ? ";" : ")");
    return out;
  }
  friend bool operator==(const CelestialSymbol&, const CelestialSymbol&) = default;
  friend auto operator<=>(const CelestialSymbol&, const CelestialSymbol&) = default;

  // Same symbol started at the next ring.
  CelestialSymbol rotated(int k) const {
    CelestialSymbol r{m, {}, {}};
    for (int j = 0; j < 3; ++j) {
      r.s[j] = s[(j + k) % 3];
      r.t[j] = t[(j + k) % 3];
    }
    return r;
  }
};

inline void check_range(const CelestialSymbol& sym) {
  if (sym.m < 3) throw ValidationError("celestial modulus must be at least 3");
  for (int k = 0; k < 3; ++k)
    if (sym.s[k] < 1 || sym.t[k] < 1 || 2 * sym.s[k] > sym.m || 2 * sym.t[k] > sym.m)
      throw ValidationError("celestial entries must lie in [1, m/2]: " + sym.str());
}

inline Real cosine_gap(const CelestialSymbol& sym) {
  Real pi = Real::pi(), ps(1), pt(1);
  for (int k = 0; k < 3; ++k) {
    ps *= cos(pi * Real(sym.s[k]) / Real(sym.m));
    pt *= cos(pi * Real(sym.t[k]) / Real(sym.m));
  }
  return ps - pt;
}

inline bool cosine_condition(const CelestialSymbol& sym, Precision prec = {256}) {
  PrecisionScope scope(prec);
  check_range(sym);
  return abs(cosine_gap(sym)) < Real(std::ldexp(1.0, -prec.bits / 2));
}

// Ring radii r_0 = 1, r_{k+1} = r_k cos(pi s_k / m) / cos(pi t_k / m).
inline std::array<Real, 3> ring_radii(const CelestialSymbol& sym) {
  Real pi = Real::pi();
  std::array<Real, 3> r{Real(1), Real(0), Real(0)};
  for (int k = 0; k < 2; ++k) r[k + 1] = r[k] * cos(pi * Real(sym.s[k]) / Real(sym.m)) / cos(pi * Real(sym.t[k]) / Real(sym.m));
  return r;
}

struct Admissibility {
  bool ok = false;
  std::string reason;
};

inline Admissibility admissible(const CelestialSymbol& sym, Precision prec = {256}) {
  PrecisionScope scope(prec);
  check_range(sym);
  Admissibility a;
  if (!cosine_condition(sym, prec)) return a.reason = "cosine condition fails", a;
  for (int k = 0; k < 3; ++k) {
    if (sym.s[k] == sym.t[k]) return a.reason = "span equals crossing in class " + std::to_string(k), a;
    if (sym.t[k] == sym.s[(k + 1) % 3]) return a.reason = "crossing equals next span in class " + std::to_string(k), a;
  }
  int sum = 0;
  for (int k = 0; k < 3; ++k) sum += sym.s[k] - sym.t[k];
  if (sum % 2 != 0) return a.reason = "ring offsets do not close", a;
  auto r = ring_radii(sym);
  Real tol(std::ldexp(1.0, -prec.bits / 4));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (abs(r[i] - r[j]) < tol) return a.reason = "rings " + std::to_string(i) + " and " + std::to_string(j) + " coincide", a;
  a.ok = true;
  return a;
}

// Every symbol with entries in [1, m/2] that passes the cosine condition and
// the admissibility rules, in lexicographic order.
inline std::vector<CelestialSymbol> enumerate_celestial(int m, Precision prec = {256}) {
  std::vector<CelestialSymbol> out;
  int h = m / 2;
  std::array<int, 6> v{};
  std::function<void(int)> rec = [&](int k) {
    if (k == 6) {
      CelestialSymbol sym{m, {v[0], v[2], v[4]}, {v[1], v[3], v[5]}};
      if (admissible(sym, prec).ok) out.push_back(sym);
      return;
    }
    for (int x = 1; x <= h; ++x) {
      v[k] = x;
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

// Point classes u, v, w (rings 0, 1, 2); line classes L, M, N (lines of class k
// join ring k to ring k+1).
inline GeometricConfiguration celestial_construct(const CelestialSymbol& sym, Precision prec = {256}) {
  PrecisionScope scope(prec);
  check_range(sym);
  const int m = sym.m;
  auto r = ring_radii(sym);
  Real tol(std::ldexp(1.0, -prec.bits / 4));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (abs(r[i] - r[j]) < tol) throw GeometryError("celestial rings collapse in " + sym.str());
  Real pi = Real::pi();
  std::array<Real, 3> phase{Real(0), Real(0), Real(0)};
  for (int k = 0; k < 2; ++k) phase[k + 1] = phase[k] + pi * Real(sym.s[k] - sym.t[k]) / Real(m);

  static const char* pcls[3] = {"u", "v", "w"};
  static const char* lcls[3] = {"L", "M", "N"};
  GeometricConfiguration cfg;
  cfg.name = sym.str();
  cfg.m = m;
  cfg.bits = prec.bits;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < m; ++i) {
      Real th = phase[k] + Real(2) * pi * Real(i) / Real(m);
      cfg.point_labels.push_back({pcls[k], i});
      cfg.points.push_back({r[k] * cos(th), r[k] * sin(th), Real(1)});
    }
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < m; ++i) {
      // normal direction through the midpoint of the chord u_i u_{i+s}
      Real psi = phase[k] + Real(2) * pi * Real(i) / Real(m) + pi * Real(sym.s[k]) / Real(m);
      Real d = r[k] * cos(pi * Real(sym.s[k]) / Real(m));
      cfg.line_labels.push_back({lcls[k], i});
      cfg.lines.push_back({cos(psi), sin(psi), -d});
    }
  double inc_tol = std::ldexp(1.0, -prec.bits / 2);
  auto inc = extract_incidences(cfg, inc_tol);
  for (const auto& [p, l] : inc.incidences) cfg.incidences.push_back({cfg.find_point(p), cfg.find_line(l)});
  finalize_configuration(cfg);
  return cfg;
}

inline CelestialSymbol gr_symbol() { return {7, {2, 3, 1}, {1, 2, 3}}; }

// Rings at radii 1, cos(2pi/7)/cos(pi/7), cos(3pi/7)/cos(pi/7), the middle one turned by pi/7.
inline GeometricConfiguration gr_coordinates(Precision prec = {256}) {
  auto cfg = celestial_construct(gr_symbol(), prec);
  cfg.name = "GR(21_4)";
  return cfg;
}

}  // namespace polycfg
