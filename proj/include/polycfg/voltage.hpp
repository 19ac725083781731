#pragma once
// Reduced Levi graphs with Z_m voltages and their lifts.

#include <array>
#include <string>
#include <vector>

#include "incidence.hpp"

namespace polycfg {

inline int mod(long v, int m) {
  long r = v % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

struct ReducedLeviGraph {
  struct Node {
    std::string cls;
    Kind kind;
  };
  // Line class L, point class v, voltage a: L_i is incident with v_{i+a}.
  struct Arc {
    int line;
    int point;
    int voltage;
  };

  int m = 1;
  std::vector<Node> nodes;
  std::vector<Arc> arcs;

  int node(const std::string& cls) const {
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
      if (nodes[i].cls == cls) return i;
    return -1;
  }
  int add_node(std::string cls, Kind k) {
    nodes.push_back({std::move(cls), k});
    return static_cast<int>(nodes.size()) - 1;
  }
  void add_arc(const std::string& line, const std::string& point, long voltage) {
    arcs.push_back({node(line), node(point), mod(voltage, m)});
  }

  void validate() const {
    if (m < 1) throw ValidationError("voltage modulus must be positive");
    for (const auto& a : arcs) {
      if (a.line < 0 || a.point < 0 || a.line >= static_cast<int>(nodes.size()) || a.point >= static_cast<int>(nodes.size()))
        throw ValidationError("arc with unknown endpoint");
      if (nodes[a.line].kind != Kind::Line || nodes[a.point].kind != Kind::Point)
        throw ValidationError("arc must join a line class to a point class");
      if (a.voltage < 0 || a.voltage >= m) throw ValidationError("voltage not reduced");
    }
  }
};

class DegenerateLift : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

struct Lift {
  IncidenceStructure structure;
  LeviGraph graph;
};

// Points come first in node order, then lines; incidences follow arc order per line.
inline Lift lift(const ReducedLeviGraph& r) {
  r.validate();
  const int m = r.m;
  for (std::size_t i = 0; i < r.arcs.size(); ++i)
    for (std::size_t j = i + 1; j < r.arcs.size(); ++j)
      if (r.arcs[i].line == r.arcs[j].line && r.arcs[i].point == r.arcs[j].point && r.arcs[i].voltage == r.arcs[j].voltage)
        throw DegenerateLift("degenerate lift: parallel incidence " + r.nodes[r.arcs[i].line].cls + "-" +
                             r.nodes[r.arcs[i].point].cls + " with voltage " + std::to_string(r.arcs[i].voltage));
  Lift out;
  for (const auto& n : r.nodes)
    if (n.kind == Kind::Point)
      for (int i = 0; i < m; ++i) out.structure.points.push_back({n.cls, i});
  for (const auto& n : r.nodes)
    if (n.kind == Kind::Line)
      for (int i = 0; i < m; ++i) out.structure.lines.push_back({n.cls, i});
  for (int L = 0; L < static_cast<int>(r.nodes.size()); ++L) {
    if (r.nodes[L].kind != Kind::Line) continue;
    for (int i = 0; i < m; ++i)
      for (const auto& a : r.arcs)
        if (a.line == L) out.structure.incidences.push_back({{r.nodes[a.point].cls, (i + a.voltage) % m}, {r.nodes[L].cls, i}});
  }
  out.graph = levi_from_incidences(out.structure);
  return out;
}

// Entries a c d e f g q a' c' d' e' f' g' q' t.
using ParameterVector = std::array<int, 15>;

inline const std::array<const char*, 15>& parameter_names() {
  static const std::array<const char*, 15> names = {"a", "c", "d", "e", "f", "g", "q", "a'",
                                                    "c'", "d'", "e'", "f'", "g'", "q'", "t"};
  return names;
}

inline std::string to_string(const ParameterVector& p) {
  std::string s = "{";
  for (int i = 0; i < 15; ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "}";
}

inline ParameterVector parse_parameters(const std::string& text) {
  ParameterVector p{};
  int count = 0;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    if (count >= 15) throw ValidationError("more than 15 parameters");
    p[count++] = std::stoi(tok);
    tok.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '{' || ch == '}') flush();
    else tok += ch;
  }
  flush();
  if (count != 15) throw ValidationError("expected 15 parameters, got " + std::to_string(count));
  return p;
}

inline const std::vector<std::string>& b_point_classes() {
  static const std::vector<std::string> v = {"R", "Y", "G", "B", "C", "M", "P"};
  return v;
}
inline const std::vector<std::string>& b_line_classes() {
  static const std::vector<std::string> v = {"m", "p", "b", "c", "g", "y", "r"};
  return v;
}
// Row order of the published incidence table.
inline const std::vector<std::string>& b_table_order() {
  static const std::vector<std::string> v = {"r", "y", "g", "m", "b", "c", "p"};
  return v;
}

// The 14-vertex template; spanning-tree arcs carry voltage 0.
inline ReducedLeviGraph rlg_b_template(int m, const ParameterVector& p) {
  const auto [a, c, d, e, f, g, q, a2, c2, d2, e2, f2, g2, q2, t] = p;
  ReducedLeviGraph r;
  r.m = m;
  for (const auto& s : b_point_classes()) r.add_node(s, Kind::Point);
  for (const auto& s : b_line_classes()) r.add_node(s, Kind::Line);
  r.add_arc("r", "M", 0), r.add_arc("r", "M", a2), r.add_arc("r", "G", d), r.add_arc("r", "P", 0);
  r.add_arc("y", "M", c2), r.add_arc("y", "B", e), r.add_arc("y", "C", 0), r.add_arc("y", "P", 0);
  r.add_arc("g", "B", 0), r.add_arc("g", "C", f), r.add_arc("g", "R", d2), r.add_arc("g", "P", 0);
  r.add_arc("m", "Y", c), r.add_arc("m", "R", 0), r.add_arc("m", "R", a), r.add_arc("m", "P", q);
  r.add_arc("b", "C", t), r.add_arc("b", "C", g), r.add_arc("b", "Y", e2), r.add_arc("b", "G", 0);
  r.add_arc("c", "B", 0), r.add_arc("c", "B", g2), r.add_arc("c", "G", f2), r.add_arc("c", "Y", 0);
  r.add_arc("p", "R", 0), r.add_arc("p", "Y", 0), r.add_arc("p", "G", 0), r.add_arc("p", "M", q2);
  return r;
}

// Grünbaum-Rigby template over Z_7: L_i ∋ u_i u_{i+2} v_i v_{i+1}, M_i ∋ v_i v_{i+3} w_i w_{i+2},
// N_i ∋ w_i w_{i+1} u_i u_{i+3}.
inline ReducedLeviGraph rlg_gr_template() {
  ReducedLeviGraph r;
  r.m = 7;
  for (const char* s : {"u", "v", "w"}) r.add_node(s, Kind::Point);
  for (const char* s : {"L", "M", "N"}) r.add_node(s, Kind::Line);
  r.add_arc("L", "u", 0), r.add_arc("L", "u", 2), r.add_arc("L", "v", 0), r.add_arc("L", "v", 1);
  r.add_arc("M", "v", 0), r.add_arc("M", "v", 3), r.add_arc("M", "w", 0), r.add_arc("M", "w", 2);
  r.add_arc("N", "w", 0), r.add_arc("N", "w", 1), r.add_arc("N", "u", 0), r.add_arc("N", "u", 3);
  return r;
}

// Index shift i -> i+1 within every class of a lift.
inline std::vector<int> deck_transformation(const LeviGraph& g, int m) {
  std::vector<int> p(g.size());
  for (int v = 0; v < g.size(); ++v) p[v] = g.find({g.labels[v].cls, (g.labels[v].index + 1) % m});
  return p;
}

}  // namespace polycfg
