#pragma once
// Incidence structures, Levi graphs and their basic validation.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "label.hpp"

namespace polycfg {

enum class Kind : std::uint8_t { Point = 0, Line = 1 };

inline const char* to_string(Kind k) { return k == Kind::Point ? "POINT" : "LINE"; }

using Adjacency = std::vector<std::vector<int>>;

inline constexpr int kInfinity = std::numeric_limits<int>::max();

struct IncidenceStructure {
  std::vector<Label> points;
  std::vector<Label> lines;
  std::vector<std::pair<Label, Label>> incidences;  // (point, line)

  // Throws ValidationError on duplicate labels, duplicate pairs or dangling labels.
  void validate() const {
    std::set<Label> ps, ls;
    for (const auto& p : points)
      if (!ps.insert(p).second) throw ValidationError("duplicate point label " + p.str());
    for (const auto& l : lines)
      if (!ls.insert(l).second) throw ValidationError("duplicate line label " + l.str());
    std::set<std::pair<Label, Label>> seen;
    for (const auto& [p, l] : incidences) {
      std::string pair = "(" + p.str() + ", " + l.str() + ")";
      if (!ps.count(p)) throw ValidationError("dangling point in incidence " + pair);
      if (!ls.count(l)) throw ValidationError("dangling line in incidence " + pair);
      if (!seen.insert({p, l}).second) throw ValidationError("duplicate incidence " + pair);
    }
  }

  std::set<std::pair<Label, Label>> incidence_set() const {
    return {incidences.begin(), incidences.end()};
  }
};

struct LeviGraph {
  std::vector<Label> labels;
  std::vector<Kind> kinds;
  Adjacency adj;

  int size() const { return static_cast<int>(adj.size()); }
  std::size_t edge_count() const {
    std::size_t s = 0;
    for (const auto& a : adj) s += a.size();
    return s / 2;
  }
  int count(Kind k) const { return static_cast<int>(std::count(kinds.begin(), kinds.end(), k)); }

  int find(const Label& l) const {
    for (int v = 0; v < size(); ++v)
      if (labels[v] == l) return v;
    return -1;
  }

  int add_vertex(Label l, Kind k) {
    labels.push_back(std::move(l));
    kinds.push_back(k);
    adj.emplace_back();
    return size() - 1;
  }
  bool has_edge(int u, int v) const {
    return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
  }
  void add_edge(int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u)
      for (int v : adj[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  // Back to (point, line) pairs, ordered by line then adjacency order.
  IncidenceStructure incidences() const {
    IncidenceStructure s;
    for (int v = 0; v < size(); ++v) (kinds[v] == Kind::Point ? s.points : s.lines).push_back(labels[v]);
    for (int v = 0; v < size(); ++v)
      if (kinds[v] == Kind::Line)
        for (int u : adj[v]) s.incidences.emplace_back(labels[u], labels[v]);
    return s;
  }
};

inline LeviGraph levi_from_incidences(const IncidenceStructure& s) {
  s.validate();
  LeviGraph g;
  std::map<Label, int> pidx, lidx;
  for (const auto& p : s.points) pidx[p] = g.add_vertex(p, Kind::Point);
  for (const auto& l : s.lines) lidx[l] = g.add_vertex(l, Kind::Line);
  for (const auto& [p, l] : s.incidences) g.add_edge(pidx.at(p), lidx.at(l));
  return g;
}

// Shortest cycle length by breadth-first search from every vertex; kInfinity for forests.
inline int girth(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  int best = kInfinity;
  std::vector<int> dist(n), parent(n);
  std::vector<int> queue(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      int u = queue[head++];
      if (2 * dist[u] >= best) break;
      bool skipped_parent = false;
      for (int w : adj[u]) {
        if (w == parent[u] && !skipped_parent) {
          skipped_parent = true;
          continue;
        }
        if (w == u) return 1;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}
inline int girth(const LeviGraph& g) { return girth(g.adj); }

inline bool is_connected(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

struct NkReport {
  bool ok = false;
  int points = 0, lines = 0;
  int girth = kInfinity;
  bool connected = false;
  std::vector<std::string> violations;
};

inline NkReport validate_nk(const LeviGraph& g, int n, int k) {
  NkReport r;
  r.points = g.count(Kind::Point);
  r.lines = g.count(Kind::Line);
  r.girth = girth(g);
  r.connected = is_connected(g.adj);
  if (r.points != n) r.violations.push_back("expected " + std::to_string(n) + " points, found " + std::to_string(r.points));
  if (r.lines != n) r.violations.push_back("expected " + std::to_string(n) + " lines, found " + std::to_string(r.lines));
  for (int v = 0; v < g.size(); ++v) {
    if (static_cast<int>(g.adj[v].size()) != k)
      r.violations.push_back(g.labels[v].str() + " has degree " + std::to_string(g.adj[v].size()));
    for (int w : g.adj[v])
      if (g.kinds[w] == g.kinds[v]) r.violations.push_back("edge " + g.labels[v].str() + "-" + g.labels[w].str() + " joins equal kinds");
  }
  if (r.girth < 6)
    r.violations.push_back("girth " + std::to_string(r.girth) + " < 6");
  r.ok = r.violations.empty();
  return r;
}

struct TypeCensus {
  std::map<int, int> points;  // degree -> count
  std::map<int, int> lines;
  bool balanced() const { return points == lines; }
  std::string str() const {
    auto side = [](const std::map<int, int>& h) {
      std::string s = "{";
      bool first = true;
      for (auto [d, c] : h) {
        s += (first ? "" : ", ") + std::to_string(d) + ":" + std::to_string(c);
        first = false;
      }
      return s + "}";
    };
    return side(points) + "/" + side(lines);
  }
  // Type symbol with subscript degrees, e.g. ((6₂)(9₄)) when both sides agree.
  std::string symbol() const {
    static const char* sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    auto side = [](const std::map<int, int>& h) {
      std::string s;
      for (auto [d, c] : h) {
        std::string ds;
        for (char ch : std::to_string(d)) ds += sub[ch - '0'];
        s += "(" + std::to_string(c) + ds + ")";
      }
      return s;
    };
    if (balanced()) return "(" + side(points) + ")";
    return "(" + side(points) + ", " + side(lines) + ")";
  }
};

inline TypeCensus degree_census(const IncidenceStructure& s) {
  std::map<Label, int> pd, ld;
  for (const auto& p : s.points) pd[p] = 0;
  for (const auto& l : s.lines) ld[l] = 0;
  for (const auto& [p, l] : s.incidences) {
    ++pd[p];
    ++ld[l];
  }
  TypeCensus c;
  for (const auto& [_, d] : pd) ++c.points[d];
  for (const auto& [_, d] : ld) ++c.lines[d];
  return c;
}

// One row per line, grouped by class in the given order, points in incidence order.
inline std::string incidence_table(const IncidenceStructure& s, const std::vector<std::string>& class_order) {
  std::map<Label, std::vector<Label>> rows;
  for (const auto& l : s.lines) rows[l];
  for (const auto& [p, l] : s.incidences) rows[l].push_back(p);

  std::vector<std::string> order = class_order;
  for (const auto& l : s.lines)
    if (std::find(order.begin(), order.end(), l.cls) == order.end()) order.push_back(l.cls);

  std::size_t w = 0, cols = 0;
  for (const auto& [l, pts] : rows) {
    w = std::max(w, display_width(l.pretty()));
    cols = std::max(cols, pts.size());
    for (const auto& p : pts) w = std::max(w, display_width(p.pretty()));
  }
  auto pad = [w](const std::string& s) { return s + std::string(w - display_width(s), ' '); };

  std::ostringstream out;
  for (const auto& cls : order) {
    std::vector<Label> ls;
    for (const auto& [l, _] : rows)
      if (l.cls == cls) ls.push_back(l);
    std::sort(ls.begin(), ls.end(), [](const Label& a, const Label& b) { return a.index < b.index; });
    for (const auto& l : ls) {
      std::string line = pad(l.pretty()) + " |";
      for (const auto& p : rows[l]) line += " " + pad(p.pretty());
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    }
  }
  return out.str();
}

}  // namespace polycfg
