#pragma once
// Real solutions of {det1 = 0, det5 = 0}: multistart Newton in double,
// multiprecision polish, classification, and the precision-ladder certificate.

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "configuration.hpp"
#include "geometry_checks.hpp"
#include "scene.hpp"

namespace polycfg {

enum class Status { Degenerate, Partial, Full };
enum class Certification { Zero, Nonzero, Undecided };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Degenerate: return "DEGENERATE";
    case Status::Partial: return "PARTIAL";
    default: return "FULL";
  }
}
inline const char* to_string(Certification c) {
  switch (c) {
    case Certification::Zero: return "CERTIFIED_ZERO";
    case Certification::Nonzero: return "CERTIFIED_NONZERO";
    default: return "UNDECIDED";
  }
}

struct SearchDomain {
  double x0 = -8, x1 = 8, z0 = -8, z1 = 8;
  int grid = 41;  // starts per axis
};

struct SolveOptions {
  Precision precision{256};
  SearchDomain domain{};
  int jobs = 1;
};

struct Rational {
  Int num = 0, den = 1;
  std::string str() const { return den == 1 ? num.str() : num.str() + "/" + den.str(); }
  Real value() const { return Real(num.str()) / Real(den.str()); }
};

struct LadderRung {
  int bits = 0;
  Real det3, det4;  // normalized
};

struct SolutionCandidate {
  Real x, z;
  std::optional<Rational> exact_x, exact_z;  // set when the root is rational
  Status status = Status::Degenerate;
  std::vector<std::string> witnesses;
  bool singular = false;
  Certification det3 = Certification::Undecided;
  Certification det4 = Certification::Undecided;
  std::vector<LadderRung> ladder;
  double residual = 0;  // max normalized |det1|, |det5| at base precision
};

// The residual map (x, z) -> (det1, det5). For m = 3 this is the exact
// polynomial pair with gcd(det1, det5) divided out; otherwise the normalized
// determinants of the numeric scene.
class ResidualSystem {
 public:
  ResidualSystem(int m, const ParameterVector& p) : m_(m), params_(p) {
    if (m < 3) throw ValidationError("modulus must be at least 3");
    if (m == 3) {
      exact_ = exact_system_m3(p);
      f1_ = PolyEval(exact_->reduced1);
      f5_ = PolyEval(exact_->reduced5);
    }
  }

  int m() const { return m_; }
  const ParameterVector& params() const { return params_; }
  bool exact() const { return exact_.has_value(); }
  const ExactSystem& exact_system() const { return *exact_; }

  template <class T>
  std::array<T, 2> eval(const T& x, const T& z) const {
    if (exact_) return {f1_(x, z), f5_(x, z)};
    auto r = residuals(build_scene(m_, params_, x, z));
    return {r.det1, r.det5};
  }

  // Residuals on a scale where 1 means "not small".
  template <class T>
  std::array<T, 2> normalized(const T& x, const T& z) const {
    auto f = eval(x, z);
    if (!exact_) return f;
    using std::abs;
    T s1 = f1_.magnitude(x, z), s5 = f5_.magnitude(x, z);
    return {s1 > T(0) ? T(abs(f[0]) / s1) : T(abs(f[0])), s5 > T(0) ? T(abs(f[1]) / s5) : T(abs(f[1]))};
  }

  bool is_exact_root(const Rational& x, const Rational& z) const {
    return exact_ && vanishes_at(exact_->reduced1, x.num, x.den, z.num, z.den) &&
           vanishes_at(exact_->reduced5, x.num, x.den, z.num, z.den);
  }

 private:
  int m_;
  ParameterVector params_;
  std::optional<ExactSystem> exact_;
  PolyEval f1_, f5_;
};

namespace detail {

template <class B>
struct Step {
  B dx, dz, jdet, jnorm;
  bool ok;
};

// Levenberg-Marquardt step for F: R^2 -> R^2 at damping lambda (lambda = 0 is Newton).
template <class B>
Step<B> lm_step(const ResidualSystem& sys, const B& x, const B& z, const B& lambda) {
  using D = Dual<B>;
  auto f = sys.eval(D::variable(x, 0), D::variable(z, 1));
  B a = f[0].d0, b = f[0].d1, c = f[1].d0, d = f[1].d1;
  B r0 = f[0].v, r1 = f[1].v;
  B det = a * d - b * c;
  B jn = a * a + b * b + c * c + d * d;
  Step<B> s{B(0), B(0), det, jn, false};
  if (lambda == B(0)) {
    if (det == B(0)) return s;
    s.dx = -(d * r0 - b * r1) / det;
    s.dz = -(-c * r0 + a * r1) / det;
  } else {
    B g0 = a * r0 + c * r1, g1 = b * r0 + d * r1;
    B h00 = a * a + c * c + lambda * jn, h01 = a * b + c * d, h11 = b * b + d * d + lambda * jn;
    B hd = h00 * h11 - h01 * h01;
    if (hd == B(0)) return s;
    s.dx = -(h11 * g0 - h01 * g1) / hd;
    s.dz = -(-h01 * g0 + h00 * g1) / hd;
  }
  s.ok = (s.dx == s.dx) && (s.dz == s.dz);
  return s;
}

inline double merit(const ResidualSystem& sys, double x, double z) {
  try {
    auto n = sys.normalized(x, z);
    double v = n[0] * n[0] + n[1] * n[1];
    return v == v ? v : INFINITY;
  } catch (const GeometryError&) {
    return INFINITY;
  }
}

struct DoubleRoot {
  double x, z, merit;
};

inline std::optional<DoubleRoot> newton_double(const ResidualSystem& sys, double x, double z, const SearchDomain& dom) {
  double lambda = 1e-3;
  double m = merit(sys, x, z);
  if (!(m < INFINITY)) return std::nullopt;
  double wx = dom.x1 - dom.x0, wz = dom.z1 - dom.z0;
  for (int it = 0; it < 300; ++it) {
    if (m < 1e-30) break;
    Step<double> s;
    try {
      s = lm_step<double>(sys, x, z, lambda);
    } catch (const GeometryError&) {
      return std::nullopt;
    }
    if (!s.ok) return std::nullopt;
    double nx = x + s.dx, nz = z + s.dz;
    double nm = merit(sys, nx, nz);
    if (nm < m) {
      double moved = std::abs(s.dx) + std::abs(s.dz);
      x = nx, z = nz, m = nm;
      lambda = std::max(lambda / 10, 1e-12);
      if (moved < 1e-15 * (1 + std::abs(x) + std::abs(z))) break;
    } else {
      lambda *= 10;
      if (lambda > 1e8) break;
    }
    if (x < dom.x0 - wx || x > dom.x1 + wx || z < dom.z0 - wz || z > dom.z1 + wz) return std::nullopt;
  }
  if (!(m < 1e-18)) return std::nullopt;
  return DoubleRoot{x, z, m};
}

inline std::optional<Rational> snap(double v, int max_den, double tol) {
  for (int q = 1; q <= max_den; ++q) {
    double p = std::round(v * q);
    if (std::abs(v - p / q) < tol) {
      Rational r;
      r.num = Int(static_cast<long long>(p));
      r.den = q;
      return r;
    }
  }
  return std::nullopt;
}

// Newton at the working precision until the step stalls below 2^-(bits-8).
inline bool polish(const ResidualSystem& sys, Real& x, Real& z, bool* singular = nullptr, int max_iter = 600) {
  const int bits = working_precision().bits;
  Real stop = pow2<Real>(-(bits - 8));
  Step<Real> s{};
  bool converged = false;
  for (int it = 0; it < max_iter; ++it) {
    try {
      s = lm_step<Real>(sys, x, z, Real(0));
    } catch (const GeometryError&) {
      return false;
    }
    if (!s.ok) break;
    x = x + s.dx;
    z = z + s.dz;
    Real moved = abs(s.dx) + abs(s.dz);
    if (moved <= stop * (Real(1) + abs(x) + abs(z))) {
      converged = true;
      break;
    }
  }
  if (singular) *singular = !(abs(s.jdet) > Real(1e-10) * s.jnorm);
  return converged;
}

}  // namespace detail

// Two-stage multistart. Candidates are sorted by (x, z).
inline std::vector<SolutionCandidate> find_roots(const ResidualSystem& sys, const SolveOptions& opt) {
  const auto& dom = opt.domain;
  const int n = std::max(2, dom.grid);
  std::vector<detail::DoubleRoot> raw;
  std::mutex mu;
  const int jobs = std::max(1, opt.jobs);
  auto worker = [&](int w) {
    std::vector<detail::DoubleRoot> mine;
    for (int k = w; k < n * n; k += jobs) {
      double x = dom.x0 + (dom.x1 - dom.x0) * (k / n) / (n - 1);
      double z = dom.z0 + (dom.z1 - dom.z0) * (k % n) / (n - 1);
      // Nudge off the lattice so starts avoid the rational degenerate points exactly.
      x += 1e-3 * (dom.x1 - dom.x0) / n;
      z += 7e-4 * (dom.z1 - dom.z0) / n;
      if (auto r = detail::newton_double(sys, x, z, dom)) mine.push_back(*r);
    }
    std::lock_guard<std::mutex> lock(mu);
    raw.insert(raw.end(), mine.begin(), mine.end());
  };
  std::vector<std::thread> threads;
  for (int w = 1; w < jobs; ++w) threads.emplace_back(worker, w);
  worker(0);
  for (auto& t : threads) t.join();

  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.merit < b.merit; });
  std::vector<detail::DoubleRoot> uniq;
  for (const auto& r : raw) {
    if (r.x < dom.x0 || r.x > dom.x1 || r.z < dom.z0 || r.z > dom.z1) continue;
    bool seen = false;
    for (const auto& u : uniq)
      if (std::abs(u.x - r.x) + std::abs(u.z - r.z) < 1e-5 * (1 + std::abs(u.x) + std::abs(u.z))) seen = true;
    if (!seen) uniq.push_back(r);
  }

  PrecisionScope scope(opt.precision);
  const int bits = opt.precision.bits;
  std::vector<SolutionCandidate> out;
  auto try_snap = [&](SolutionCandidate& c, double vx, double vz, double tol) {
    if (!sys.exact()) return false;
    auto sx = detail::snap(vx, 64, tol), sz = detail::snap(vz, 64, tol);
    if (!sx || !sz || !sys.is_exact_root(*sx, *sz)) return false;
    c.exact_x = sx;
    c.exact_z = sz;
    c.x = sx->value();
    c.z = sz->value();
    c.singular = false;
    return true;
  };
  for (const auto& r : uniq) {
    SolutionCandidate c;
    if (!try_snap(c, r.x, r.z, 1e-6)) {
      c.x = Real(r.x);
      c.z = Real(r.z);
      bool converged = detail::polish(sys, c.x, c.z, &c.singular, 200);
      if (!converged) c.singular = true;
      // Multiple roots converge slowly; an exact check decides whether a nearby
      // small-denominator rational is the root.
      if (!try_snap(c, c.x.to_double(), c.z.to_double(), c.singular ? 2e-2 : 1e-12)) {
        auto nr = sys.normalized(c.x, c.z);
        Real floor = pow2<Real>(-bits / 4);
        if (!(nr[0] < floor && nr[1] < floor)) continue;
      }
    }
    bool dup = false;
    for (const auto& o : out)
      if (abs(o.x - c.x) + abs(o.z - c.z) < Real(1e-9) * (Real(1) + abs(c.x) + abs(c.z))) dup = true;
    if (dup) continue;
    auto nr = sys.normalized(c.x, c.z);
    c.residual = std::max(nr[0].to_double(), nr[1].to_double());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.x < b.x || (a.x == b.x && a.z < b.z); });
  return out;
}

// Projective coincidences among same-kind elements of a scene.
inline std::vector<std::string> coincidences(const Scene<Real>& s, const Real& tol, std::size_t limit = 8) {
  std::vector<std::string> out;
  if (!(s.worst_ratio > tol)) out.push_back("degenerate step " + s.worst_step);
  for (int kind = 0; kind < 2; ++kind) {
    std::vector<std::pair<int, int>> el;
    for (int c = 0; c < kClassCount; ++c)
      if (class_is_point(c) == (kind == 0))
        for (int i = 0; i < s.m; ++i) el.push_back({c, i});
    for (std::size_t a = 0; a < el.size() && out.size() < limit; ++a)
      for (std::size_t b = a + 1; b < el.size() && out.size() < limit; ++b) {
        Real d = projective_distance(s.at(el[a].first, el[a].second), s.at(el[b].first, el[b].second));
        if (!(d > tol))
          out.push_back(std::string(class_name(el[a].first)) + "_" + std::to_string(el[a].second) + "=" +
                        class_name(el[b].first) + "_" + std::to_string(el[b].second));
      }
  }
  return out;
}

namespace detail {

inline std::vector<int> ladder_bits(int base_bits) {
  std::vector<int> out;
  for (int p : {128, 256, 512, 1024})
    if (p <= 4 * base_bits) out.push_back(p);
  return out;
}

}  // namespace detail

// Re-refines the candidate at 128, 256, 512, 1024 bits (capped at four times
// the base precision) and reads det3, det4 at each rung. CERTIFIED_ZERO when
// every rung is below 2^-(p/2); CERTIFIED_NONZERO when every rung is above
// 10^6 times that and the value is stable; fewer than three rungs is UNDECIDED.
inline void certify(SolutionCandidate& c, const ResidualSystem& sys, int base_bits) {
  c.ladder.clear();
  Real x0 = c.x, z0 = c.z;
  for (int p : detail::ladder_bits(base_bits)) {
    PrecisionScope scope(Precision{p});
    Real x, z;
    if (c.exact_x) {
      x = c.exact_x->value();
      z = c.exact_z->value();
    } else {
      x = x0.at_bits(p);
      z = z0.at_bits(p);
      detail::polish(sys, x, z);
      x0 = x, z0 = z;
    }
    auto r = residuals(build_scene(sys.m(), sys.params(), x, z));
    c.ladder.push_back({p, abs(r.det3), abs(r.det4)});
  }
  auto judge = [&](auto pick) {
    if (c.ladder.size() < 3) return Certification::Undecided;
    bool zero = true, nonzero = true;
    for (std::size_t i = 0; i < c.ladder.size(); ++i) {
      PrecisionScope scope(Precision{c.ladder[i].bits});
      Real floor = pow2<Real>(-c.ladder[i].bits / 2);
      const Real& v = pick(c.ladder[i]);
      if (!(v <= floor)) zero = false;
      if (!(v > Real(1e6) * floor)) nonzero = false;
      if (i > 0) {
        const Real& u = pick(c.ladder[i - 1]);
        if (!(abs(v - u) <= Real(1e-6) * abs(v))) nonzero = false;
      }
    }
    if (zero) return Certification::Zero;
    if (nonzero) return Certification::Nonzero;
    return Certification::Undecided;
  };
  c.det3 = judge([](const LadderRung& r) -> const Real& { return r.det3; });
  c.det4 = judge([](const LadderRung& r) -> const Real& { return r.det4; });
}

inline Certification certify_zero(const std::string& name, SolutionCandidate& c, const ResidualSystem& sys, int base_bits) {
  certify(c, sys, base_bits);
  if (name == "det3") return c.det3;
  if (name == "det4") return c.det4;
  throw ValidationError("unknown residual " + name);
}

// DEGENERATE on any coincidence (tolerance 2^-(bits/4)); FULL when det3 and det4
// certify to zero; PARTIAL otherwise, naming the determinants that do not.
inline void classify(SolutionCandidate& c, const ResidualSystem& sys, int bits) {
  PrecisionScope scope(Precision{bits});
  auto s = build_scene(sys.m(), sys.params(), c.x, c.z);
  c.witnesses = coincidences(s, pow2<Real>(-bits / 4));
  if (!c.witnesses.empty()) {
    c.status = Status::Degenerate;
    return;
  }
  certify(c, sys, bits);
  if (c.det3 == Certification::Zero && c.det4 == Certification::Zero) {
    c.status = Status::Full;
    return;
  }
  c.status = Status::Partial;
  if (c.det3 != Certification::Zero) c.witnesses.push_back(std::string("det3 ") + to_string(c.det3));
  if (c.det4 != Certification::Zero) c.witnesses.push_back(std::string("det4 ") + to_string(c.det4));
}

inline std::vector<SolutionCandidate> solve_system(int m, const ParameterVector& p, const SolveOptions& opt = {}) {
  ResidualSystem sys(m, p);
  auto cands = find_roots(sys, opt);
  for (auto& c : cands) classify(c, sys, opt.precision.bits);
  return cands;
}

// ---------- α/β oracles ----------

struct KnownRootOracle {
  std::string name;
  std::array<long, 13> coefficients;  // s^12 first
};

inline const KnownRootOracle& alpha_oracle() {
  static const KnownRootOracle a{"alpha", {9, -45, 108, -114, -57, 390, -668, 684, -468, 217, -66, 12, -1}};
  return a;
}
inline const KnownRootOracle& beta_oracle() {
  static const KnownRootOracle b{"beta", {1, 9, 15, -36, -33, 129, -193, 216, -162, 76, -24, 6, -1}};
  return b;
}

// |q(s)| / sum |q_k| |s|^k.
inline Real oracle_value(const KnownRootOracle& o, const Real& s) {
  Real v(0), mag(0), as = abs(s);
  for (long k : o.coefficients) {
    v = v * s + Real(k);
    mag = mag * as + Real(std::abs(k));
  }
  return abs(v) / mag;
}

// Sturm count of distinct real roots.
inline int real_root_count(const KnownRootOracle& o) {
  using Q = boost::multiprecision::cpp_rational;
  using P = std::vector<Q>;  // highest degree first
  auto trim = [](P p) {
    std::size_t i = 0;
    while (i < p.size() && p[i] == 0) ++i;
    return P(p.begin() + static_cast<long>(i), p.end());
  };
  auto rem = [&](P a, const P& b) {
    while (a.size() >= b.size() && !a.empty()) {
      Q f = a[0] / b[0];
      for (std::size_t i = 0; i < b.size(); ++i) a[i] -= f * b[i];
      a = trim(a);
    }
    return a;
  };
  P p0(o.coefficients.begin(), o.coefficients.end()), p1;
  int deg = static_cast<int>(p0.size()) - 1;
  for (int i = 0; i < deg; ++i) p1.push_back(p0[i] * (deg - i));
  std::vector<P> seq = {p0, p1};
  while (true) {
    P r = rem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& v : r) v = -v;
    seq.push_back(r);
  }
  auto changes = [&](bool at_plus) {
    int n = 0, prev = 0;
    for (const auto& q : seq) {
      int deg_q = static_cast<int>(q.size()) - 1;
      int s = q[0] > 0 ? 1 : -1;
      if (!at_plus && deg_q % 2 == 1) s = -s;
      if (prev != 0 && s != prev) ++n;
      prev = s;
    }
    return n;
  };
  return changes(false) - changes(true);
}

struct KnownRootReport {
  Real alpha, beta;  // normalized
  bool pass = false;
};

inline KnownRootReport known_root_check(const SolutionCandidate& c, int bits) {
  PrecisionScope scope(Precision{bits});
  KnownRootReport r;
  r.alpha = oracle_value(alpha_oracle(), c.x.at_bits(bits));
  r.beta = oracle_value(beta_oracle(), c.z.at_bits(bits));
  Real tol = pow2<Real>(-bits / 2);
  r.pass = r.alpha < tol && r.beta < tol;
  return r;
}

// ---------- realization ----------

inline GeometricConfiguration configuration_from_scene(const Scene<Real>& s, const std::string& name, int bits) {
  GeometricConfiguration cfg;
  cfg.name = name;
  cfg.m = s.m;
  cfg.bits = bits;
  for (const auto& pc : b_point_classes())
    for (int i = 0; i < s.m; ++i) {
      cfg.point_labels.push_back({pc, i});
      cfg.points.push_back(s.at(class_index(pc), i));
    }
  for (const auto& lc : b_line_classes())
    for (int i = 0; i < s.m; ++i) {
      cfg.line_labels.push_back({lc, i});
      cfg.lines.push_back(s.at(class_index(lc), i));
    }
  attach_incidences(cfg, lift(rlg_b_template(s.m, s.params)).structure);
  return cfg;
}

// Fills the strong-realization fields; throws if the check fails.
inline void finalize_configuration(GeometricConfiguration& cfg) {
  PrecisionScope scope(Precision{cfg.bits});
  double inc_tol = std::ldexp(1.0, -std::min(cfg.bits / 2, 1000));
  double sep_tol = std::ldexp(1.0, -std::min(cfg.bits / 4, 1000));
  auto rep = check_strong(cfg, inc_tol, sep_tol);
  if (!rep.ok) throw GeometryError("strong realization failed: " + rep.message);
  cfg.max_incidence_residual = rep.max_incidence_residual;
  cfg.min_point_separation = rep.min_point_separation;
  cfg.min_line_separation = rep.min_line_separation;
  cfg.symmetry_order = geometric_symmetries(cfg).rotations;
}

struct Realization {
  SolutionCandidate candidate;
  GeometricConfiguration configuration;
};

inline std::vector<Realization> realize(int m, const ParameterVector& p, const SolveOptions& opt = {}) {
  std::vector<Realization> out;
  for (auto& c : solve_system(m, p, opt)) {
    if (c.status != Status::Full) continue;
    PrecisionScope scope(opt.precision);
    auto s = build_scene(m, p, c.x, c.z);
    Realization r{c, configuration_from_scene(s, "", opt.precision.bits)};
    finalize_configuration(r.configuration);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace polycfg
