#pragma once
// Exhaustive sweep of the 15-parameter template over Z_3.

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "symmetry.hpp"

namespace polycfg {

struct EnumerationRecord {
  ParameterVector params{};
  Certificate certificate;
  long aut_order = 0;
  bool self_dual = false;
  bool connected = false;
  long representatives = 0;  // parameter vectors lifting to this class
};

struct EnumerationFilters {
  bool require_connected = false;
  int jobs = 1;
};

struct EnumerationStats {
  long candidates = 0;
  long girth_survivors = 0;
};

namespace detail {

// Line classes in sweep order with the parameter slots they consume.
// Point class ids: R0 Y1 G2 B3 C4 M5 P6.
struct SweepClass {
  std::array<int, 3> slots;  // parameter indices, -1 unused
  int count;
};

class Sweep {
 public:
  explicit Sweep(int m) : m_(m) {}

  static const std::array<SweepClass, 7>& classes() {
    // m: c a q | p: q' | b: t g e' | c: g' f' | g: f d' | y: c' e | r: a' d
    static const std::array<SweepClass, 7> cls = {{{{1, 0, 6}, 3},
                                                  {{13, -1, -1}, 1},
                                                  {{14, 5, 10}, 3},
                                                  {{12, 11, -1}, 2},
                                                  {{4, 9, -1}, 2},
                                                  {{8, 3, -1}, 2},
                                                  {{7, 2, -1}, 2}}};
    return cls;
  }

  std::uint32_t bit(int cls, int idx) const { return 1u << (cls * m_ + ((idx % m_) + m_) % m_); }

  // Point masks of the m lines of sweep class k.
  void masks(int k, const ParameterVector& p, std::uint32_t* out) const {
    const auto [a, c, d, e, f, g, q, a2, c2, d2, e2, f2, g2, q2, t] = p;
    enum { R, Y, G, B, C, M, P };
    for (int i = 0; i < m_; ++i) {
      std::uint32_t s = 0;
      switch (k) {
        case 0: s = bit(Y, i + c) | bit(R, i) | bit(R, i + a) | bit(P, i + q); break;
        case 1: s = bit(R, i) | bit(Y, i) | bit(G, i) | bit(M, i + q2); break;
        case 2: s = bit(C, i + t) | bit(C, i + g) | bit(Y, i + e2) | bit(G, i); break;
        case 3: s = bit(B, i) | bit(B, i + g2) | bit(G, i + f2) | bit(Y, i); break;
        case 4: s = bit(B, i) | bit(C, i + f) | bit(R, i + d2) | bit(P, i); break;
        case 5: s = bit(M, i + c2) | bit(B, i + e) | bit(C, i) | bit(P, i); break;
        case 6: s = bit(M, i) | bit(M, i + a2) | bit(G, i + d) | bit(P, i); break;
      }
      out[i] = s;
    }
  }

  // Depth-first over classes; `visit` receives every parameter vector whose
  // lift has four distinct points per line and no two lines sharing two points.
  template <class Visit>
  void run(int first_value_begin, int first_value_end, Visit&& visit, long& candidates) {
    ParameterVector p{};
    std::vector<std::uint32_t> lines(7 * m_);
    recurse(0, p, lines, first_value_begin, first_value_end, visit, candidates);
  }

 private:
  template <class Visit>
  void recurse(int k, ParameterVector& p, std::vector<std::uint32_t>& lines, int vb, int ve, Visit& visit, long& candidates) {
    if (k == 7) {
      ++candidates;
      visit(p);
      return;
    }
    const auto& sc = classes()[k];
    int combos = 1;
    for (int j = 0; j < sc.count; ++j) combos *= m_;
    int lo = 0, hi = combos;
    if (k == 0) lo = vb, hi = ve;
    for (int code = lo; code < hi; ++code) {
      int rest = code;
      for (int j = sc.count - 1; j >= 0; --j) {
        p[sc.slots[j]] = rest % m_;
        rest /= m_;
      }
      std::uint32_t* mine = &lines[k * m_];
      masks(k, p, mine);
      bool ok = true;
      for (int i = 0; i < m_ && ok; ++i) {
        if (std::popcount(mine[i]) != 4) ok = false;
        for (int j = 0; j < k * m_ && ok; ++j)
          if (std::popcount(mine[i] & lines[j]) > 1) ok = false;
        for (int j = 0; j < i && ok; ++j)
          if (std::popcount(mine[i] & mine[j]) > 1) ok = false;
      }
      if (!ok) {
        long skipped = 1;
        for (int r = k + 1; r < 7; ++r)
          for (int j = 0; j < classes()[r].count; ++j) skipped *= m_;
        candidates += skipped;
        continue;
      }
      recurse(k + 1, p, lines, vb, ve, visit, candidates);
    }
  }

  int m_;
};

}  // namespace detail

// All parameter vectors over Z_m (m <= 4) with girth >= 6 lifts, grouped by
// Levi graph up to isomorphism and duality. Records are sorted by their
// lexicographically smallest parameter vector.
inline std::vector<EnumerationRecord> enumerate_template(int m, const EnumerationFilters& filters,
                                                         EnumerationStats* stats = nullptr) {
  if (m < 2 || m > 4) throw ValidationError("sweep supports 2 <= m <= 4");
  int first_combos = m * m * m;
  int jobs = std::max(1, std::min(filters.jobs, first_combos));
  std::mutex mu;
  std::map<Certificate, EnumerationRecord> found;
  std::atomic<long> total_candidates{0}, total_survivors{0};

  auto worker = [&](int w) {
    int vb = first_combos * w / jobs, ve = first_combos * (w + 1) / jobs;
    detail::Sweep sweep(m);
    std::map<Certificate, EnumerationRecord> local;
    long candidates = 0, survivors = 0;
    sweep.run(vb, ve, [&](const ParameterVector& p) {
      ++survivors;
      Lift l = lift(rlg_b_template(m, p));
      bool conn = is_connected(l.graph.adj);
      if (filters.require_connected && !conn) return;
      Certificate c = canonical_form(l.graph, true).certificate;
      auto [it, inserted] = local.try_emplace(c);
      auto& r = it->second;
      if (inserted || p < r.params) r.params = p;
      if (inserted) {
        r.certificate = c;
        r.connected = conn;
      }
      ++r.representatives;
    }, candidates);
    std::lock_guard<std::mutex> lock(mu);
    total_candidates += candidates;
    total_survivors += survivors;
    for (auto& [c, r] : local) {
      auto [it, inserted] = found.try_emplace(c, r);
      if (!inserted) {
        if (r.params < it->second.params) it->second.params = r.params;
        it->second.representatives += r.representatives;
      }
    }
  };
  std::vector<std::thread> threads;
  for (int w = 1; w < jobs; ++w) threads.emplace_back(worker, w);
  worker(0);
  for (auto& t : threads) t.join();

  std::vector<EnumerationRecord> out;
  for (auto& [c, r] : found) out.push_back(r);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.params < b.params; });
  for (auto& r : out) {
    Lift l = lift(rlg_b_template(m, r.params));
    GroupSummary s = automorphisms(l.graph);
    r.aut_order = s.order;
    r.self_dual = s.reversing > 0;
  }
  if (stats) {
    stats->candidates = total_candidates;
    stats->girth_survivors = total_survivors;
  }
  return out;
}

inline std::vector<EnumerationRecord> enumerate_z3(const EnumerationFilters& filters = {},
                                                   EnumerationStats* stats = nullptr) {
  return enumerate_template(3, filters, stats);
}

struct LiftReport {
  int m = 0;
  ParameterVector params{};
  bool liftable = false;  // false when parallel arcs carry equal voltages
  std::string error;
  int girth = kInfinity;
  bool connected = false;
  NkReport nk;
  Certificate certificate;
};

// Combinatorial checks of the template lift for a (7m_4) candidate.
inline LiftReport family_lift_report(int m, const ParameterVector& p) {
  LiftReport r;
  r.m = m;
  r.params = p;
  Lift l;
  try {
    l = lift(rlg_b_template(m, p));
  } catch (const ValidationError& e) {
    r.error = e.what();
    return r;
  }
  r.liftable = true;
  r.girth = girth(l.graph);
  r.connected = is_connected(l.graph.adj);
  r.nk = validate_nk(l.graph, 7 * m, 4);
  r.certificate = canonical_form(l.graph, true).certificate;
  return r;
}

}  // namespace polycfg
