#pragma once
// Automorphism groups, self-dualities, semiregular elements and quotients.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "canon.hpp"
#include "voltage.hpp"

namespace polycfg {

inline Perm compose(const Perm& a, const Perm& b) {  // a after b
  Perm c(b.size());
  for (std::size_t v = 0; v < b.size(); ++v) c[v] = a[b[v]];
  return c;
}
inline Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) q[p[v]] = static_cast<int>(v);
  return q;
}
inline Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}
inline Perm power(const Perm& p, int k) {
  Perm r = identity_perm(static_cast<int>(p.size()));
  for (int i = 0; i < k; ++i) r = compose(p, r);
  return r;
}
inline std::vector<std::vector<int>> cycles(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (seen[v]) continue;
    std::vector<int> c;
    for (int u = static_cast<int>(v); !seen[u]; u = p[u]) {
      seen[u] = 1;
      c.push_back(u);
    }
    out.push_back(std::move(c));
  }
  return out;
}
inline long perm_order(const Perm& p) {
  long o = 1;
  for (const auto& c : cycles(p)) o = std::lcm(o, static_cast<long>(c.size()));
  return o;
}
inline bool is_bijection(const Perm& p) {
  std::vector<char> hit(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

enum class ColorBehavior { Preserving, Reversing };

struct VertexPermutation {
  Perm map;
  long order = 1;
  ColorBehavior behavior = ColorBehavior::Preserving;

  bool reversing() const { return behavior == ColorBehavior::Reversing; }

  // Cycle notation over labels, fixed points omitted.
  std::string cycle_string(const LeviGraph& g) const {
    std::string s;
    for (const auto& c : cycles(map)) {
      if (c.size() < 2) continue;
      s += "(";
      for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + g.labels[c[i]].str();
      s += ")";
    }
    return s.empty() ? "()" : s;
  }
};

inline ColorBehavior behavior_of(const LeviGraph& g, const Perm& p) {
  for (int v = 0; v < g.size(); ++v)
    if (g.kinds[p[v]] == g.kinds[v]) return ColorBehavior::Preserving;
  return g.size() ? ColorBehavior::Reversing : ColorBehavior::Preserving;
}

inline VertexPermutation make_vertex_permutation(const LeviGraph& g, Perm p) {
  VertexPermutation vp;
  vp.order = perm_order(p);
  vp.behavior = behavior_of(g, p);
  vp.map = std::move(p);
  return vp;
}

// Builds a permutation from cycle notation such as "(R_0,M_0)(Y_1,G_2)"; unmentioned vertices are fixed.
inline VertexPermutation parse_cycles(const LeviGraph& g, const std::string& text) {
  Perm p = identity_perm(g.size());
  std::size_t pos = 0;
  while ((pos = text.find('(', pos)) != std::string::npos) {
    std::size_t end = text.find(')', pos);
    if (end == std::string::npos) throw ValidationError("unbalanced cycle notation");
    std::vector<int> cyc;
    std::stringstream ss(text.substr(pos + 1, end - pos - 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
      int v = g.find(Label::parse(tok));
      if (v < 0) throw ValidationError("unknown label in cycle: " + tok);
      cyc.push_back(v);
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) p[cyc[i]] = cyc[(i + 1) % cyc.size()];
    pos = end + 1;
  }
  if (!is_bijection(p)) throw ValidationError("cycle notation is not a permutation");
  return make_vertex_permutation(g, std::move(p));
}

inline bool is_automorphism(const LeviGraph& g, const VertexPermutation& vp) {
  const Perm& p = vp.map;
  if (static_cast<int>(p.size()) != g.size()) throw ValidationError("incomplete vertex mapping");
  if (!is_bijection(p)) return false;
  for (int v = 0; v < g.size(); ++v) {
    bool flips = g.kinds[p[v]] != g.kinds[v];
    if (flips != vp.reversing()) return false;
  }
  for (int u = 0; u < g.size(); ++u)
    for (int w : g.adj[u])
      if (!g.has_edge(p[u], p[w])) return false;
  return true;
}

struct GroupSummary {
  long order = 0;
  long preserving = 0;
  long reversing = 0;
  std::vector<VertexPermutation> generators;
  std::vector<VertexPermutation> elements;  // all of them, identity first
};

// Size of the group generated by `gens`, by breadth-first closure.
inline long closure_size(const std::vector<Perm>& gens, int n) {
  std::set<Perm> seen{identity_perm(n)};
  std::vector<Perm> frontier{identity_perm(n)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Perm y = compose(g, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier.swap(next);
  }
  return static_cast<long>(seen.size());
}

// Full automorphism group, colour-reversing maps included.
inline GroupSummary automorphisms(const LeviGraph& g) {
  GroupSummary s;
  const int n = g.size();
  detail::Search pres(g.adj, detail::kind_colors(g, false), true);
  pres.run();
  const Perm first_inv = n ? inverse(pres.best_labelling()) : Perm{};
  std::vector<Perm> all;
  if (n == 0) {
    all.push_back({});
  } else {
    for (const auto& leaf : pres.best_leaves()) all.push_back(compose(first_inv, leaf));
    detail::Search rev(g.adj, detail::kind_colors(g, true), true);
    rev.run();
    if (rev.best() == pres.best())
      for (const auto& leaf : rev.best_leaves()) all.push_back(compose(first_inv, leaf));
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  auto id = identity_perm(n);
  std::stable_partition(all.begin(), all.end(), [&](const Perm& p) { return p == id; });
  for (auto& p : all) {
    auto vp = make_vertex_permutation(g, p);
    (vp.reversing() ? s.reversing : s.preserving)++;
    s.elements.push_back(std::move(vp));
  }
  s.order = static_cast<long>(s.elements.size());

  // greedy generating set, preferring high-order elements
  std::vector<const VertexPermutation*> cand;
  for (const auto& e : s.elements) cand.push_back(&e);
  std::stable_sort(cand.begin(), cand.end(), [](auto* a, auto* b) { return a->order > b->order; });
  std::vector<Perm> gens;
  long reached = 1;
  std::set<Perm> group{id};
  for (auto* c : cand) {
    if (reached == s.order) break;
    if (group.count(c->map)) continue;
    gens.push_back(c->map);
    s.generators.push_back(*c);
    // recompute closure as a set
    std::set<Perm> seen{id};
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const auto& x : frontier)
        for (const auto& gen : gens) {
          Perm y = compose(gen, x);
          if (seen.insert(y).second) next.push_back(std::move(y));
        }
      frontier.swap(next);
    }
    group.swap(seen);
    reached = static_cast<long>(group.size());
  }
  return s;
}

inline std::vector<VertexPermutation> self_dualities(const LeviGraph& g) {
  std::vector<VertexPermutation> out;
  for (auto& e : automorphisms(g).elements)
    if (e.reversing()) out.push_back(e);
  return out;
}

// Minimal order of a colour-reversing automorphism, if any.
inline std::optional<long> duality_rank(const LeviGraph& g) {
  std::optional<long> best;
  for (const auto& e : self_dualities(g))
    if (!best || e.order < *best) best = e.order;
  return best;
}

inline bool is_semiregular(const Perm& p) {
  auto cs = cycles(p);
  if (cs.empty() || cs.front().size() < 2) return false;
  for (const auto& c : cs)
    if (c.size() != cs.front().size()) return false;
  return true;
}

// Non-identity automorphisms without fixed points whose cycles share one length.
inline std::vector<VertexPermutation> semiregular_automorphisms(const GroupSummary& s) {
  std::vector<VertexPermutation> out;
  for (const auto& e : s.elements)
    if (is_semiregular(e.map)) out.push_back(e);
  return out;
}
inline std::vector<VertexPermutation> semiregular_automorphisms(const LeviGraph& g) {
  return semiregular_automorphisms(automorphisms(g));
}

struct QuotientGraph {
  enum OrbitColor { PointOrbit = 0, LineOrbit = 1, MixedOrbit = 2 };
  struct Edge {
    int from, to;  // orbit ids
    int voltage;   // representative of `from` meets p^voltage(rep of `to`)
    bool semi;     // edge orbit of half length (flipped edge)
  };
  int m = 1;
  std::vector<int> orbit_of;
  std::vector<int> rep;
  std::vector<int> color;
  std::vector<Edge> edges;
  bool bipartite = false;

  int size() const { return static_cast<int>(rep.size()); }

  // Vertex-coloured simple graph encoding the multigraph; voltages are dropped.
  std::pair<Adjacency, std::vector<int>> encoded() const {
    Adjacency adj(rep.size());
    std::vector<int> col(color);
    for (const auto& e : edges) {
      int s = static_cast<int>(adj.size());
      adj.emplace_back();
      col.push_back(e.semi ? 5 : (e.from == e.to ? 4 : 3));
      adj[s].push_back(e.from);
      adj[e.from].push_back(s);
      if (e.to != e.from) {
        adj[s].push_back(e.to);
        adj[e.to].push_back(s);
      }
    }
    return {adj, col};
  }
  Certificate certificate() const {
    auto [adj, col] = encoded();
    return canonical_form(adj, col).certificate;
  }

  // Valid only for bipartite quotients.
  ReducedLeviGraph reduced(const LeviGraph& g) const {
    if (!bipartite) throw ValidationError("quotient is not bipartite");
    ReducedLeviGraph r;
    r.m = m;
    for (int o = 0; o < size(); ++o) {
      const Label& l = g.labels[rep[o]];
      r.add_node(l.cls + std::to_string(l.index) + "#" + std::to_string(o),
                 color[o] == PointOrbit ? Kind::Point : Kind::Line);
    }
    for (const auto& e : edges) {
      if (color[e.from] == LineOrbit) r.arcs.push_back({e.from, e.to, e.voltage});
      else r.arcs.push_back({e.to, e.from, mod(-e.voltage, m)});
    }
    return r;
  }
};

// Quotient by the cyclic group generated by a semiregular automorphism.
// Orbit representatives come from a breadth-first spanning tree rooted at the
// orbit of vertex 0, so tree arcs carry voltage 0.
inline QuotientGraph quotient(const LeviGraph& g, const Perm& p) {
  if (!is_semiregular(p)) throw ValidationError("quotient requires a semiregular automorphism");
  const int n = g.size();
  QuotientGraph q;
  q.m = static_cast<int>(cycles(p).front().size());
  q.orbit_of.assign(n, -1);
  std::vector<int> index_in_orbit(n, 0);
  auto assign_orbit = [&](int start) {
    int id = static_cast<int>(q.rep.size());
    q.rep.push_back(start);
    int u = start;
    for (int k = 0; k < q.m; ++k, u = p[u]) {
      q.orbit_of[u] = id;
      index_in_orbit[u] = k;
    }
    return id;
  };
  for (int root = 0; root < n; ++root) {
    if (q.orbit_of[root] >= 0) continue;
    std::vector<int> queue{root};
    assign_orbit(root);
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int w : g.adj[queue[h]])
        if (q.orbit_of[w] < 0) {
          assign_orbit(w);
          queue.push_back(w);
        }
  }
  for (int o = 0; o < q.size(); ++o) {
    bool pt = false, ln = false;
    for (int u = q.rep[o], k = 0; k < q.m; ++k, u = p[u]) (g.kinds[u] == Kind::Point ? pt : ln) = true;
    q.color.push_back(pt && ln ? QuotientGraph::MixedOrbit : (pt ? QuotientGraph::PointOrbit : QuotientGraph::LineOrbit));
  }
  for (int o = 0; o < q.size(); ++o) {
    int r = q.rep[o];
    for (int w : g.adj[r]) {
      int t = q.orbit_of[w];
      int k = mod(index_in_orbit[w] - index_in_orbit[q.rep[t]], q.m);
      if (t > o) q.edges.push_back({o, t, k, false});
      else if (t == o) {
        if (2 * k < q.m) q.edges.push_back({o, o, k, false});
        else if (2 * k == q.m) q.edges.push_back({o, o, k, true});
      }
    }
  }
  q.bipartite = true;
  for (int c : q.color)
    if (c == QuotientGraph::MixedOrbit) q.bipartite = false;
  for (const auto& e : q.edges)
    if (q.color[e.from] == q.color[e.to]) q.bipartite = false;
  return q;
}

// --- named graphs ---

// Point-line incidence graph of the Fano plane.
inline LeviGraph heawood() {
  LeviGraph g;
  for (int i = 0; i < 7; ++i) g.add_vertex({"p", i}, Kind::Point);
  for (int i = 0; i < 7; ++i) g.add_vertex({"l", i}, Kind::Line);
  for (int i = 0; i < 7; ++i)
    for (int d : {0, 1, 3}) g.add_edge((i + d) % 7, 7 + i);
  return g;
}

inline Adjacency line_graph(const Adjacency& adj) {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < static_cast<int>(adj.size()); ++u)
    for (int w : adj[u])
      if (u < w) es.emplace_back(u, w);
  Adjacency out(es.size());
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) {
        out[i].push_back(static_cast<int>(j));
        out[j].push_back(static_cast<int>(i));
      }
    }
  return out;
}
inline Adjacency line_graph(const LeviGraph& g) { return line_graph(g.adj); }

// Bipartite double cover: copy 0 tagged POINT, copy 1 tagged LINE.
inline LeviGraph kronecker_cover(const Adjacency& adj) {
  LeviGraph g;
  const int n = static_cast<int>(adj.size());
  for (int v = 0; v < n; ++v) g.add_vertex({"x", v}, Kind::Point);
  for (int v = 0; v < n; ++v) g.add_vertex({"y", v}, Kind::Line);
  for (int u = 0; u < n; ++u)
    for (int w : adj[u]) g.add_edge(u, n + w);
  return g;
}

}  // namespace polycfg
