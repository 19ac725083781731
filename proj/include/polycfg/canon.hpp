#pragma once
// Canonical labelling of vertex-coloured simple graphs by colour refinement
// and individualisation. The same search enumerates automorphisms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "incidence.hpp"

namespace polycfg {

using Perm = std::vector<int>;  // vertex v maps to p[v]

struct Certificate {
  std::vector<std::uint32_t> words;
  friend auto operator<=>(const Certificate&, const Certificate&) = default;
  friend bool operator==(const Certificate&, const Certificate&) = default;

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(words.size() * 8);
    for (std::uint32_t w : words)
      for (int shift = 28; shift >= 0; shift -= 4) s += digits[(w >> shift) & 0xF];
    return s;
  }
};

namespace detail {

class Search {
 public:
  Search(const Adjacency& adj, const std::vector<int>& colors, bool exhaustive)
      : adj_(adj), colors_(colors), n_(static_cast<int>(adj.size())), exhaustive_(exhaustive) {}

  void run() {
    std::vector<int> cell = initial();
    path_.clear();
    dfs(cell);
  }

  const Certificate& best() const { return best_; }
  const Perm& best_labelling() const { return best_leaves_.front(); }
  const std::vector<Perm>& best_leaves() const { return best_leaves_; }
  const std::vector<Perm>& found_automorphisms() const { return autos_; }

 private:
  std::vector<int> initial() const {
    std::vector<int> ids(colors_);
    std::vector<int> sorted(ids);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> cell(n_);
    for (int v = 0; v < n_; ++v)
      cell[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), ids[v]) - sorted.begin());
    return cell;
  }

  // Colour refinement to the coarsest equitable partition finer than `cell`.
  // Cell ids are ranks of (old id, sorted neighbour ids), so the result is
  // labelling-invariant.
  int refine(std::vector<int>& cell) {
    int classes = count_classes(cell);
    std::vector<std::vector<int>> sig(n_);
    std::vector<int> order(n_);
    while (true) {
      for (int v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(cell[v]);
        for (int w : adj_[v]) s.push_back(cell[w]);
        std::sort(s.begin() + 1, s.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      int rank = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
        cell[order[i]] = rank;
      }
      int next = n_ ? rank + 1 : 0;
      if (next == classes) return classes;
      classes = next;
    }
  }

  static int count_classes(const std::vector<int>& cell) {
    int mx = -1;
    for (int c : cell) mx = std::max(mx, c);
    return mx + 1;
  }

  Certificate leaf_certificate(const std::vector<int>& pos) const {
    Certificate c;
    c.words.reserve(n_ + adj_.size() * 4);
    std::vector<int> inv(n_);
    for (int v = 0; v < n_; ++v) inv[pos[v]] = v;
    for (int i = 0; i < n_; ++i) c.words.push_back(static_cast<std::uint32_t>(colors_[inv[i]]));
    std::vector<std::uint32_t> es;
    for (int u = 0; u < n_; ++u)
      for (int w : adj_[u])
        if (pos[u] < pos[w]) es.push_back(static_cast<std::uint32_t>(pos[u]) * n_ + pos[w]);
    std::sort(es.begin(), es.end());
    c.words.insert(c.words.end(), es.begin(), es.end());
    return c;
  }

  bool fixes_path(const Perm& p) const {
    for (int v : path_)
      if (p[v] != v) return false;
    return true;
  }

  void dfs(std::vector<int> cell) {
    int classes = refine(cell);
    if (classes == n_) {
      Certificate c = leaf_certificate(cell);
      if (best_leaves_.empty() || c < best_) {
        best_ = std::move(c);
        best_leaves_.assign(1, cell);
        if (exhaustive_) autos_.clear();
      } else if (c == best_) {
        if (exhaustive_) best_leaves_.push_back(cell);
        // automorphism: first best leaf inverse composed with this one
        const Perm& first = best_leaves_.front();
        std::vector<int> inv(n_);
        for (int v = 0; v < n_; ++v) inv[first[v]] = v;
        Perm a(n_);
        for (int v = 0; v < n_; ++v) a[v] = inv[cell[v]];
        autos_.push_back(std::move(a));
      }
      return;
    }
    std::vector<int> size(classes, 0);
    for (int v = 0; v < n_; ++v) ++size[cell[v]];
    int target = -1;
    for (int k = 0; k < classes; ++k)
      if (size[k] > 1 && (target < 0 || size[k] < size[target])) target = k;

    std::vector<int> members;
    for (int v = 0; v < n_; ++v)
      if (cell[v] == target) members.push_back(v);

    // orbit pruning with discovered automorphisms that fix the current path
    std::vector<int> orbit(n_);
    std::iota(orbit.begin(), orbit.end(), 0);
    auto find = [&](int v) {
      while (orbit[v] != v) v = orbit[v] = orbit[orbit[v]];
      return v;
    };
    std::size_t used = 0;
    std::vector<char> done(n_, 0);
    for (int v : members) {
      if (!exhaustive_) {
        for (; used < autos_.size(); ++used) {
          const Perm& a = autos_[used];
          if (!fixes_path(a)) continue;
          for (int u = 0; u < n_; ++u) {
            int x = find(u), y = find(a[u]);
            if (x != y) orbit[std::max(x, y)] = std::min(x, y);
          }
        }
        int r = find(v);
        if (done[r]) continue;
        done[r] = 1;
      }
      std::vector<int> child(cell);
      for (int& c : child) c *= 2;
      child[v] -= 1;
      path_.push_back(v);
      dfs(std::move(child));
      path_.pop_back();
    }
  }

  const Adjacency& adj_;
  std::vector<int> colors_;
  int n_;
  bool exhaustive_;
  std::vector<int> path_;
  Certificate best_;
  std::vector<Perm> best_leaves_;
  std::vector<Perm> autos_;
};

inline std::vector<int> kind_colors(const LeviGraph& g, bool swapped) {
  std::vector<int> c(g.size());
  for (int v = 0; v < g.size(); ++v) c[v] = (static_cast<int>(g.kinds[v]) ^ (swapped ? 1 : 0));
  return c;
}

}  // namespace detail

struct CanonicalForm {
  Certificate certificate;
  Perm relabelling;  // vertex -> canonical position
  bool swapped = false;
};

// Canonical form of a coloured graph (colours are part of the certificate).
inline CanonicalForm canonical_form(const Adjacency& adj, const std::vector<int>& colors) {
  detail::Search s(adj, colors, false);
  s.run();
  return {s.best(), s.best_labelling(), false};
}

inline CanonicalForm canonical_form(const LeviGraph& g, bool allow_color_swap) {
  CanonicalForm a = canonical_form(g.adj, detail::kind_colors(g, false));
  if (!allow_color_swap) return a;
  CanonicalForm b = canonical_form(g.adj, detail::kind_colors(g, true));
  b.swapped = true;
  return b.certificate < a.certificate ? b : a;
}

inline bool are_isomorphic(const LeviGraph& g1, const LeviGraph& g2, bool allow_color_swap) {
  if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) return false;
  return canonical_form(g1, allow_color_swap).certificate == canonical_form(g2, allow_color_swap).certificate;
}

}  // namespace polycfg
