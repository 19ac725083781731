#pragma once
// The two parameter families F1(m; a, b) and F2(m; a, b) and batch realization scans.

#include <string>
#include <vector>

#include "enumerate.hpp"
#include "solver.hpp"

namespace polycfg {

enum class Family { F1, F2 };

struct FamilySpec {
  Family family = Family::F1;
  int m = 3;
  int a = 1, b = 1;

  std::string str() const {
    return std::string(family == Family::F1 ? "F1" : "F2") + "(" + std::to_string(m) + ";" + std::to_string(a) + "," +
           std::to_string(b) + ")";
  }
};

inline void check_spec(const FamilySpec& s) {
  if (s.m < 3) throw ValidationError(s.str() + ": modulus must be at least 3");
  if (s.a < s.b) throw ValidationError(s.str() + ": requires a >= b");
  if (s.family == Family::F1) {
    if (s.b < 1 || 2 * s.a > s.m) throw ValidationError(s.str() + ": requires 1 <= a, b <= m/2");
  } else {
    if (s.b < 1 || s.a >= s.m) throw ValidationError(s.str() + ": requires 1 <= b <= a < m");
    if (2 * s.a == s.m) throw ValidationError(s.str() + ": requires a != m/2");
  }
}

inline ParameterVector family_params(const FamilySpec& s) {
  check_spec(s);
  const long a = s.a, b = s.b;
  std::array<long, 15> raw;
  if (s.family == Family::F1)
    raw = {a, -a, a, b, b, -a, -2 * a, a, -a, a, b, b, -a, -2 * a, 0};
  else
    raw = {a, b, b, b, b, b, b, a, b, b, b, b, b, b, 0};
  ParameterVector p{};
  for (int i = 0; i < 15; ++i) p[i] = mod(raw[i], s.m);
  return p;
}

// Every valid spec of one family with m in [m_lo, m_hi].
inline std::vector<FamilySpec> family_specs(Family f, int m_lo, int m_hi) {
  std::vector<FamilySpec> out;
  for (int m = std::max(3, m_lo); m <= m_hi; ++m)
    for (int a = 1; a < m; ++a)
      for (int b = 1; b <= a; ++b) {
        FamilySpec s{f, m, a, b};
        try {
          check_spec(s);
        } catch (const ValidationError&) {
          continue;
        }
        out.push_back(s);
      }
  return out;
}

struct FamilyRow {
  FamilySpec spec;
  ParameterVector params{};
  LiftReport lift;
  int full = 0, partial = 0, degenerate = 0;
  std::vector<Realization> realizations;
  double best_separation = 0;   // min point separation of the best FULL realization
  double best_residual = 0;     // its max incidence residual
  std::string error;            // set when the solver could not run
};

inline FamilyRow scan_spec(const FamilySpec& spec, const SolveOptions& opt) {
  FamilyRow row;
  row.spec = spec;
  row.params = family_params(spec);
  row.lift = family_lift_report(spec.m, row.params);
  if (!row.lift.liftable || !row.lift.nk.ok) return row;
  try {
    ResidualSystem sys(spec.m, row.params);
    auto cands = find_roots(sys, opt);
    for (auto& c : cands) {
      classify(c, sys, opt.precision.bits);
      if (c.status == Status::Degenerate) {
        ++row.degenerate;
        continue;
      }
      if (c.status == Status::Partial) {
        ++row.partial;
        continue;
      }
      ++row.full;
      PrecisionScope scope(opt.precision);
      auto s = build_scene(spec.m, row.params, c.x, c.z);
      Realization r{c, configuration_from_scene(s, spec.str(), opt.precision.bits)};
      try {
        finalize_configuration(r.configuration);
      } catch (const GeometryError& e) {
        row.error = e.what();
        continue;
      }
      if (r.configuration.min_point_separation > row.best_separation) {
        row.best_separation = r.configuration.min_point_separation;
        row.best_residual = r.configuration.max_incidence_residual;
      }
      row.realizations.push_back(std::move(r));
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

// Rows in spec order; failures are data, not errors.
inline std::vector<FamilyRow> scan_family(const std::vector<FamilySpec>& specs, const SolveOptions& opt) {
  std::vector<FamilyRow> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back(scan_spec(s, opt));
  return out;
}

}  // namespace polycfg
