#pragma once
// Geometric configurations: labelled point and line coordinates with their
// incidences, plus the checks that make them strong realizations.

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "projective.hpp"
#include "voltage.hpp"

namespace polycfg {

struct GeometricConfiguration {
  std::string name;
  int m = 1;
  int bits = 256;
  std::vector<Label> point_labels, line_labels;
  std::vector<Vec3<Real>> points, lines;
  std::vector<std::pair<int, int>> incidences;  // (point index, line index)
  double max_incidence_residual = 0;
  double min_point_separation = 0;
  double min_line_separation = 0;
  int symmetry_order = 1;

  bool empty() const { return points.empty() && lines.empty(); }
  int find_point(const Label& l) const {
    for (std::size_t i = 0; i < point_labels.size(); ++i)
      if (point_labels[i] == l) return static_cast<int>(i);
    return -1;
  }
  int find_line(const Label& l) const {
    for (std::size_t i = 0; i < line_labels.size(); ++i)
      if (line_labels[i] == l) return static_cast<int>(i);
    return -1;
  }
};

inline double incidence_residual(const Vec3<Real>& p, const Vec3<Real>& l) {
  Real r = abs(dot(p, l)) / (norm(p) * norm(l));
  return r.to_double();
}

// Copies the incidences of a lift onto a configuration whose labels match it.
inline void attach_incidences(GeometricConfiguration& cfg, const IncidenceStructure& s) {
  cfg.incidences.clear();
  for (const auto& [p, l] : s.incidences) {
    int pi = cfg.find_point(p), li = cfg.find_line(l);
    if (pi < 0 || li < 0) throw ValidationError("incidence refers to unknown element " + p.str() + " " + l.str());
    cfg.incidences.push_back({pi, li});
  }
}

struct StrongReport {
  bool ok = false;
  std::string message;
  double max_incidence_residual = 0;
  double min_point_separation = 0;
  double min_line_separation = 0;
};

// Euclidean separation of affine points; sine separation of unit lines.
inline StrongReport check_strong(const GeometricConfiguration& cfg, double incidence_tol, double distinct_tol) {
  StrongReport r;
  r.ok = true;
  for (const auto& [p, l] : cfg.incidences)
    r.max_incidence_residual = std::max(r.max_incidence_residual, incidence_residual(cfg.points[p], cfg.lines[l]));
  if (!(r.max_incidence_residual < incidence_tol)) {
    r.ok = false;
    r.message = "incidence residual " + std::to_string(r.max_incidence_residual);
  }
  double best = INFINITY;
  for (std::size_t i = 0; i < cfg.points.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.points.size(); ++j) {
      const auto& a = cfg.points[i];
      const auto& b = cfg.points[j];
      double d;
      if (abs(a.z) > Real(0) && abs(b.z) > Real(0)) {
        Real dx = a.x / a.z - b.x / b.z, dy = a.y / a.z - b.y / b.z;
        d = sqrt(dx * dx + dy * dy).to_double();
      } else {
        d = projective_distance(a, b).to_double();
      }
      if (d < best) best = d;
      if (!(d > distinct_tol) && r.ok) {
        r.ok = false;
        r.message = "points " + cfg.point_labels[i].str() + " and " + cfg.point_labels[j].str() + " coincide";
      }
    }
  r.min_point_separation = cfg.points.size() < 2 ? 0 : best;
  best = INFINITY;
  for (std::size_t i = 0; i < cfg.lines.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.lines.size(); ++j) {
      double d = projective_distance(cfg.lines[i], cfg.lines[j]).to_double();
      if (d < best) best = d;
      if (!(d > distinct_tol) && r.ok) {
        r.ok = false;
        r.message = "lines " + cfg.line_labels[i].str() + " and " + cfg.line_labels[j].str() + " coincide";
      }
    }
  r.min_line_separation = cfg.lines.size() < 2 ? 0 : best;
  return r;
}

// Incidence structure read back from coordinates: P on l iff the normalized
// residual is below tol.
inline IncidenceStructure extract_incidences(const GeometricConfiguration& cfg, double tol) {
  IncidenceStructure s;
  s.points = cfg.point_labels;
  s.lines = cfg.line_labels;
  for (std::size_t l = 0; l < cfg.lines.size(); ++l)
    for (std::size_t p = 0; p < cfg.points.size(); ++p)
      if (incidence_residual(cfg.points[p], cfg.lines[l]) < tol) s.incidences.push_back({cfg.point_labels[p], cfg.line_labels[l]});
  return s;
}

inline LeviGraph extract_levi(const GeometricConfiguration& cfg, double tol) {
  return levi_from_incidences(extract_incidences(cfg, tol));
}

}  // namespace polycfg
