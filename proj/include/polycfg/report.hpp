#pragma once
// The table of the seventeen Z_3 polycyclic (21_4) Levi graphs: reference
// parameters, automorphism counts, self-duality and the realizability column.

#include <optional>
#include <string>
#include <vector>

#include "io.hpp"

namespace polycfg {

struct Table2Reference {
  int item;
  ParameterVector params;
  long aut_order;
  const char* name;
  bool self_dual;
  char ndsols;  // 'Y' full realization, 'y' nondegenerate partial solutions only, 'n' degenerate only
};

inline const std::vector<Table2Reference>& table2_reference() {
  static const std::vector<Table2Reference> rows = {
      {1, {1, 2, 0, 1, 1, 1, 2, 1, 2, 0, 1, 1, 1, 2, 0}, 12, "B", true, 'Y'},
      {2, {1, 2, 0, 1, 1, 1, 2, 1, 2, 0, 1, 1, 2, 2, 0}, 6, "", true, 'y'},
      {3, {1, 2, 0, 1, 1, 2, 2, 1, 2, 0, 1, 1, 2, 2, 0}, 672, "GR", true, 'n'},
      {4, {1, 2, 0, 1, 1, 1, 2, 1, 2, 0, 2, 2, 1, 2, 0}, 12, "", true, 'n'},
      {5, {1, 2, 0, 1, 1, 1, 2, 1, 2, 0, 2, 2, 2, 2, 0}, 12, "", true, 'n'},
      {6, {1, 2, 0, 1, 1, 1, 0, 1, 2, 2, 1, 1, 1, 2, 0}, 6, "", true, 'n'},
      {7, {1, 2, 0, 1, 1, 1, 0, 1, 2, 2, 1, 1, 2, 2, 0}, 6, "", true, 'y'},
      {8, {1, 2, 0, 1, 1, 1, 0, 1, 2, 2, 2, 2, 1, 2, 0}, 12, "", true, 'n'},
      {9, {1, 2, 0, 1, 1, 1, 0, 1, 2, 2, 2, 2, 2, 2, 0}, 3, "", false, 'y'},
      {10, {1, 2, 0, 1, 1, 2, 0, 1, 2, 2, 2, 2, 2, 2, 0}, 6, "", true, 'n'},
      {11, {1, 2, 0, 2, 2, 1, 0, 1, 2, 2, 2, 2, 2, 2, 0}, 6, "", true, 'n'},
      {12, {1, 2, 0, 2, 2, 2, 0, 1, 2, 2, 2, 2, 1, 2, 0}, 6, "", true, 'n'},
      {13, {1, 2, 0, 2, 2, 2, 0, 1, 2, 2, 2, 2, 2, 2, 0}, 12, "", true, 'y'},
      {14, {1, 2, 2, 1, 1, 1, 0, 1, 2, 2, 2, 2, 2, 0, 0}, 6, "", true, 'y'},
      {15, {1, 2, 2, 1, 1, 2, 0, 1, 2, 2, 2, 2, 2, 0, 0}, 24, "", true, 'n'},
      {16, {1, 2, 2, 2, 2, 1, 0, 1, 2, 2, 2, 2, 2, 0, 0}, 12, "", true, 'n'},
      {17, {1, 2, 1, 1, 1, 1, 0, 2, 1, 2, 2, 2, 2, 0, 0}, 6, "", true, 'y'},
  };
  return rows;
}

// The parameter list used for the detailed analysis of B.
inline ParameterVector b_parameters() { return {1, 2, 1, 1, 1, 2, 1, 1, 2, 1, 1, 1, 2, 1, 0}; }
inline ParameterVector gr_row_parameters() { return table2_reference()[2].params; }

struct Table2Row {
  int item = 0;
  std::string name;
  ParameterVector params{};
  Certificate certificate;
  long aut_order = 0;
  bool self_dual = false;
  std::optional<int> enumeration_index;  // matching record of the sweep, by certificate
  bool solved = false;
  int full = 0, partial = 0, degenerate = 0;
  std::vector<SolutionCandidate> candidates;

  // '?' when the solver was not run.
  char ndsols() const {
    if (!solved) return '?';
    if (full > 0) return 'Y';
    if (partial > 0) return 'y';
    return 'n';
  }
};

struct Table2Report {
  std::vector<Table2Row> rows;
  int enumerated = 0;            // classes found by the sweep
  int configuration_count = 0;   // self-dual classes once, the others twice
  bool complete = false;         // every row matched and solved
};

inline Table2Row table2_row(const Table2Reference& ref, bool solve, const SolveOptions& opt) {
  Table2Row row;
  row.item = ref.item;
  row.name = ref.name;
  row.params = ref.params;
  Lift l = lift(rlg_b_template(3, ref.params));
  row.certificate = canonical_form(l.graph, true).certificate;
  GroupSummary g = automorphisms(l.graph);
  row.aut_order = g.order;
  row.self_dual = g.reversing > 0;
  if (solve) {
    row.candidates = solve_system(3, ref.params, opt);
    row.solved = true;
    for (const auto& c : row.candidates) {
      if (c.status == Status::Full) ++row.full;
      else if (c.status == Status::Partial) ++row.partial;
      else ++row.degenerate;
    }
  }
  return row;
}

inline Table2Report table2_report(const std::vector<EnumerationRecord>& records, bool solve, const SolveOptions& opt) {
  Table2Report rep;
  rep.enumerated = static_cast<int>(records.size());
  for (const auto& r : records) rep.configuration_count += r.self_dual ? 1 : 2;
  rep.complete = solve;
  for (const auto& ref : table2_reference()) {
    Table2Row row = table2_row(ref, solve, opt);
    for (std::size_t i = 0; i < records.size(); ++i)
      if (records[i].certificate == row.certificate) row.enumeration_index = static_cast<int>(i);
    if (!row.enumeration_index) rep.complete = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

inline std::string format_table2(const Table2Report& rep) {
  std::string out = "item  parameters                                  |Aut|  name  self-dual  NDsols  full partial degenerate\n";
  char buf[256];
  for (const auto& r : rep.rows) {
    std::snprintf(buf, sizeof buf, "%4d  %-42s  %5ld  %-4s  %-9s  %-6c  %4d %7d %10d\n", r.item, to_string(r.params).c_str(),
                  r.aut_order, r.name.c_str(), r.self_dual ? "y" : "n", r.ndsols(), r.full, r.partial, r.degenerate);
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "Levi graphs: %d; configurations counting dual pairs: %d\n", rep.enumerated,
                rep.configuration_count);
  return out + buf;
}

inline Json to_json(const Table2Report& rep, int bits) {
  Json j;
  j["rows"] = Json::array();
  for (const auto& r : rep.rows) {
    Json row{{"item", r.item},
             {"name", r.name},
             {"params", to_json(r.params)},
             {"certificate", r.certificate.hex()},
             {"aut_order", r.aut_order},
             {"self_dual", r.self_dual},
             {"ndsols", std::string(1, r.ndsols())},
             {"full", r.full},
             {"partial", r.partial},
             {"degenerate", r.degenerate}};
    row["enumeration_index"] = r.enumeration_index ? Json(*r.enumeration_index) : Json(nullptr);
    row["candidates"] = Json::array();
    for (const auto& c : r.candidates) row["candidates"].push_back(to_json(c, bits));
    j["rows"].push_back(std::move(row));
  }
  j["levi_graphs"] = rep.enumerated;
  j["configurations"] = rep.configuration_count;
  j["complete"] = rep.complete;
  return j;
}

}  // namespace polycfg
