#pragma once
// Slow reference implementations used to cross-check the library.

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "polycfg.hpp"

namespace oracle {

using polycfg::Adjacency;
using polycfg::Kind;
using polycfg::Label;
using polycfg::LeviGraph;

// Incidences of the derived cover, straight from the arc list.
inline std::set<std::pair<Label, Label>> lift_pairs(const polycfg::ReducedLeviGraph& r) {
  std::set<std::pair<Label, Label>> out;
  for (const auto& a : r.arcs)
    for (int i = 0; i < r.m; ++i)
      out.insert({{r.nodes[a.point].cls, (i + a.voltage) % r.m}, {r.nodes[a.line].cls, i}});
  return out;
}

// Girth as 1 + min over edges uv of the distance from u to v with uv removed.
inline int girth(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  int best = polycfg::kInfinity;
  for (int u = 0; u < n; ++u)
    for (int v : adj[u]) {
      if (v < u) continue;
      std::vector<int> dist(n, -1);
      std::queue<int> q;
      dist[u] = 0;
      q.push(u);
      while (!q.empty()) {
        int w = q.front();
        q.pop();
        for (int x : adj[w]) {
          if ((w == u && x == v) || (w == v && x == u)) continue;
          if (dist[x] < 0) dist[x] = dist[w] + 1, q.push(x);
        }
      }
      if (dist[v] > 0) best = std::min(best, dist[v] + 1);
    }
  return best;
}

inline bool edge(const Adjacency& adj, int u, int v) { return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end(); }

struct Counts {
  long preserving = 0, reversing = 0;
};

// Every permutation of a small Levi graph, sorted into kind preserving and kind reversing automorphisms.
inline Counts automorphisms(const LeviGraph& g) {
  const int n = g.size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Counts c;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v : g.adj[u]) ok = ok && edge(g.adj, p[u], p[v]);
    if (!ok) continue;
    bool same = true, flipped = true;
    for (int u = 0; u < n; ++u) {
      same = same && g.kinds[p[u]] == g.kinds[u];
      flipped = flipped && g.kinds[p[u]] != g.kinds[u];
    }
    if (same) ++c.preserving;
    else if (flipped) ++c.reversing;
  } while (std::next_permutation(p.begin(), p.end()));
  return c;
}

// Brute-force isomorphism respecting kinds, optionally allowing the swap.
inline bool isomorphic(const LeviGraph& a, const LeviGraph& b, bool allow_swap) {
  const int n = a.size();
  if (n != b.size() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v : a.adj[u]) ok = ok && edge(b.adj, p[u], p[v]);
    if (!ok) continue;
    bool same = true, flipped = true;
    for (int u = 0; u < n; ++u) {
      same = same && b.kinds[p[u]] == a.kinds[u];
      flipped = flipped && b.kinds[p[u]] != a.kinds[u];
    }
    if (same || (allow_swap && flipped)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// The same graph with vertices shuffled.
inline LeviGraph shuffled(const LeviGraph& g, std::mt19937& rng) {
  std::vector<int> p(g.size());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  LeviGraph h;
  std::vector<int> inv(g.size());
  for (int i = 0; i < g.size(); ++i) inv[p[i]] = i;
  for (int i = 0; i < g.size(); ++i) h.add_vertex(g.labels[inv[i]], g.kinds[inv[i]]);
  for (auto [u, v] : g.edges()) h.add_edge(p[u], p[v]);
  return h;
}

// Random bipartite graph with np points and nl lines.
inline LeviGraph random_levi(int np, int nl, double density, std::mt19937& rng) {
  LeviGraph g;
  for (int i = 0; i < np; ++i) g.add_vertex({"P", i}, Kind::Point);
  for (int i = 0; i < nl; ++i) g.add_vertex({"L", i}, Kind::Line);
  std::bernoulli_distribution coin(density);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nl; ++j)
      if (coin(rng)) g.add_edge(i, np + j);
  return g;
}

// Signed area form of three homogeneous triples in plain doubles.
inline double det(const std::array<double, 3>& u, const std::array<double, 3>& v, const std::array<double, 3>& w) {
  return u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) + u[2] * (v[0] * w[1] - v[1] * w[0]);
}

}  // namespace oracle
