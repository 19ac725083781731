#pragma once
// Deterministic SVG drawing of a configuration: class-coloured point disks and
// lines clipped to the bounding box of the points inflated by 15%.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "configuration.hpp"

namespace polycfg {

struct SvgStyle {
  int size = 800;  // canvas width and height in pixels
  double point_radius = 5;
  double line_width = 1.6;
  std::optional<double> circle_radius;  // dashed circle about the origin
  std::optional<double> mirror_angle;   // dashed line through the origin
};

inline std::string class_color(const std::string& cls, bool point) {
  struct Entry {
    const char* cls;
    const char* color;
  };
  static const Entry points[] = {{"R", "#d62728"}, {"Y", "#e6b800"}, {"G", "#2ca02c"}, {"M", "#d627c8"},
                                 {"B", "#1f4fd6"}, {"C", "#17becf"}, {"P", "#7b3fa0"}, {"u", "#d62728"},
                                 {"v", "#1f4fd6"}, {"w", "#2ca02c"}};
  static const Entry lines[] = {{"r", "#d62728"}, {"y", "#e6b800"}, {"g", "#2ca02c"}, {"m", "#d627c8"},
                                {"b", "#1f4fd6"}, {"c", "#17becf"}, {"p", "#7b3fa0"}, {"L", "#2ca02c"},
                                {"M", "#d62728"}, {"N", "#1f4fd6"}};
  if (point) {
    for (const auto& e : points)
      if (cls == e.cls) return e.color;
  } else {
    for (const auto& e : lines)
      if (cls == e.cls) return e.color;
  }
  return "#404040";
}

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  return s == "-0.000" ? "0.000" : s;
}

// Segment of a x + b y + c = 0 inside [x0,x1] x [y0,y1].
inline std::optional<std::array<double, 4>> clip_line(double a, double b, double c, double x0, double x1, double y0,
                                                      double y1) {
  std::vector<std::array<double, 2>> hits;
  auto add = [&](double x, double y) {
    const double eps = 1e-12 * (1 + std::abs(x1 - x0) + std::abs(y1 - y0));
    if (x < x0 - eps || x > x1 + eps || y < y0 - eps || y > y1 + eps) return;
    for (const auto& h : hits)
      if (std::abs(h[0] - x) + std::abs(h[1] - y) < eps) return;
    hits.push_back({x, y});
  };
  if (std::abs(b) > 0) {
    add(x0, -(a * x0 + c) / b);
    add(x1, -(a * x1 + c) / b);
  }
  if (std::abs(a) > 0) {
    add(-(b * y0 + c) / a, y0);
    add(-(b * y1 + c) / a, y1);
  }
  if (hits.size() < 2) return std::nullopt;
  std::sort(hits.begin(), hits.end());
  return std::array<double, 4>{hits.front()[0], hits.front()[1], hits.back()[0], hits.back()[1]};
}

}  // namespace detail

inline std::string render_svg(const GeometricConfiguration& cfg, const SvgStyle& style = {}) {
  const double W = style.size;
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(style.size) + "\" height=\"" +
         std::to_string(style.size) + "\" viewBox=\"0 0 " + std::to_string(style.size) + " " + std::to_string(style.size) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::vector<std::array<double, 2>> pts;
  for (const auto& p : cfg.points) {
    double z = p.z.to_double();
    if (z == 0) continue;
    pts.push_back({p.x.to_double() / z, p.y.to_double() / z});
  }
  if (pts.empty()) return out + "</svg>\n";

  double x0 = pts[0][0], x1 = x0, y0 = pts[0][1], y1 = y0;
  for (const auto& p : pts) {
    x0 = std::min(x0, p[0]), x1 = std::max(x1, p[0]);
    y0 = std::min(y0, p[1]), y1 = std::max(y1, p[1]);
  }
  double cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
  double half = std::max({x1 - x0, y1 - y0, 1e-9}) / 2 * 1.15;
  x0 = cx - half, x1 = cx + half, y0 = cy - half, y1 = cy + half;
  const double margin = 0.04 * W;
  const double scale = (W - 2 * margin) / (2 * half);
  auto sx = [&](double x) { return detail::num(margin + (x - x0) * scale); };
  auto sy = [&](double y) { return detail::num(W - margin - (y - y0) * scale); };

  if (style.circle_radius)
    out += "<circle cx=\"" + sx(0) + "\" cy=\"" + sy(0) + "\" r=\"" + detail::num(*style.circle_radius * scale) +
           "\" fill=\"none\" stroke=\"#808080\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
  if (style.mirror_angle) {
    double a = -std::sin(*style.mirror_angle), b = std::cos(*style.mirror_angle);
    if (auto seg = detail::clip_line(a, b, 0, x0, x1, y0, y1))
      out += "<line x1=\"" + sx((*seg)[0]) + "\" y1=\"" + sy((*seg)[1]) + "\" x2=\"" + sx((*seg)[2]) + "\" y2=\"" +
             sy((*seg)[3]) + "\" stroke=\"#808080\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
  }
  for (std::size_t i = 0; i < cfg.lines.size(); ++i) {
    const auto& l = cfg.lines[i];
    auto seg = detail::clip_line(l.x.to_double(), l.y.to_double(), l.z.to_double(), x0, x1, y0, y1);
    if (!seg) continue;
    out += "<line x1=\"" + sx((*seg)[0]) + "\" y1=\"" + sy((*seg)[1]) + "\" x2=\"" + sx((*seg)[2]) + "\" y2=\"" +
           sy((*seg)[3]) + "\" stroke=\"" + class_color(cfg.line_labels[i].cls, false) + "\" stroke-width=\"" +
           detail::num(style.line_width) + "\"><title>" + cfg.line_labels[i].str() + "</title></line>\n";
  }
  for (std::size_t i = 0; i < cfg.points.size(); ++i) {
    double z = cfg.points[i].z.to_double();
    if (z == 0) continue;
    double x = cfg.points[i].x.to_double() / z, y = cfg.points[i].y.to_double() / z;
    out += "<circle cx=\"" + sx(x) + "\" cy=\"" + sy(y) + "\" r=\"" + detail::num(style.point_radius) + "\" fill=\"" +
           class_color(cfg.point_labels[i].cls, true) + "\" stroke=\"black\" stroke-width=\"0.8\"><title>" +
           cfg.point_labels[i].str() + "</title></circle>\n";
  }
  return out + "</svg>\n";
}

}  // namespace polycfg
