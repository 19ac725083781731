#pragma once
// JSON persistence. Reals are written as decimal strings tagged with their
// precision; documents carry a schema version checked on load.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "enumerate.hpp"
#include "solver.hpp"

namespace polycfg {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

class SchemaError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

inline std::string format_double(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits, v);
  return buf;
}

inline int decimal_digits(int bits) { return static_cast<int>(bits * 0.30103) + 2; }

namespace detail {

inline const Json& require(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(path + ": missing \"" + key + "\"");
  return j.at(key);
}

inline int require_int(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = require(j, key, path);
  if (!v.is_number_integer()) throw SchemaError(path + "/" + key + ": expected integer");
  return v.get<int>();
}

inline std::string require_string(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = require(j, key, path);
  if (!v.is_string()) throw SchemaError(path + "/" + key + ": expected string");
  return v.get<std::string>();
}

inline Real real_from(const Json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError(path + ": expected decimal string");
  try {
    return Real(v.get<std::string>());
  } catch (const std::exception&) {
    throw SchemaError(path + ": malformed number \"" + v.get<std::string>() + "\"");
  }
}

}  // namespace detail

inline Json to_json(const Label& l) { return Json::array({l.cls, l.index}); }

inline Label label_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) return Label::parse(j.get<std::string>());
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_number_integer())
    throw SchemaError(path + ": expected [class, index]");
  return {j[0].get<std::string>(), j[1].get<int>()};
}

inline Json to_json(const IncidenceStructure& s) {
  Json j;
  j["points"] = Json::array();
  j["lines"] = Json::array();
  j["incidences"] = Json::array();
  for (const auto& p : s.points) j["points"].push_back(to_json(p));
  for (const auto& l : s.lines) j["lines"].push_back(to_json(l));
  for (const auto& [p, l] : s.incidences) j["incidences"].push_back(Json::array({to_json(p), to_json(l)}));
  return j;
}

inline IncidenceStructure incidence_from_json(const Json& j, const std::string& path = "") {
  IncidenceStructure s;
  const auto& pts = detail::require(j, "points", path);
  const auto& lns = detail::require(j, "lines", path);
  const auto& inc = detail::require(j, "incidences", path);
  for (std::size_t i = 0; i < pts.size(); ++i) s.points.push_back(label_from_json(pts[i], path + "/points/" + std::to_string(i)));
  for (std::size_t i = 0; i < lns.size(); ++i) s.lines.push_back(label_from_json(lns[i], path + "/lines/" + std::to_string(i)));
  for (std::size_t i = 0; i < inc.size(); ++i) {
    std::string ip = path + "/incidences/" + std::to_string(i);
    if (!inc[i].is_array() || inc[i].size() != 2) throw SchemaError(ip + ": expected [point, line]");
    s.incidences.push_back({label_from_json(inc[i][0], ip + "/0"), label_from_json(inc[i][1], ip + "/1")});
  }
  s.validate();
  return s;
}

inline Json to_json(const Vec3<Real>& v, int digits) {
  return Json::array({v.x.str(digits), v.y.str(digits), v.z.str(digits)});
}

inline Json to_json(const GeometricConfiguration& cfg) {
  const int digits = decimal_digits(cfg.bits);
  Json j;
  j["name"] = cfg.name;
  j["m"] = cfg.m;
  j["bits"] = cfg.bits;
  j["points"] = Json::array();
  for (std::size_t i = 0; i < cfg.points.size(); ++i)
    j["points"].push_back({{"label", to_json(cfg.point_labels[i])}, {"coords", to_json(cfg.points[i], digits)}});
  j["lines"] = Json::array();
  for (std::size_t i = 0; i < cfg.lines.size(); ++i)
    j["lines"].push_back({{"label", to_json(cfg.line_labels[i])}, {"coords", to_json(cfg.lines[i], digits)}});
  j["incidences"] = Json::array();
  for (const auto& [p, l] : cfg.incidences) j["incidences"].push_back(Json::array({p, l}));
  j["max_incidence_residual"] = format_double(cfg.max_incidence_residual);
  j["min_point_separation"] = format_double(cfg.min_point_separation);
  j["min_line_separation"] = format_double(cfg.min_line_separation);
  j["symmetry_order"] = cfg.symmetry_order;
  return j;
}

inline GeometricConfiguration configuration_from_json(const Json& j, const std::string& path = "") {
  GeometricConfiguration cfg;
  cfg.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  cfg.m = detail::require_int(j, "m", path);
  cfg.bits = detail::require_int(j, "bits", path);
  if (cfg.bits < 53) throw SchemaError(path + "/bits: below 53");
  PrecisionScope scope(Precision{cfg.bits});
  auto read_side = [&](const char* key, std::vector<Label>& labels, std::vector<Vec3<Real>>& coords) {
    const Json& arr = detail::require(j, key, path);
    if (!arr.is_array()) throw SchemaError(path + "/" + key + ": expected array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string ip = path + "/" + key + "/" + std::to_string(i);
      labels.push_back(label_from_json(detail::require(arr[i], "label", ip), ip + "/label"));
      const Json& c = detail::require(arr[i], "coords", ip);
      if (!c.is_array() || c.size() != 3) throw SchemaError(ip + "/coords: expected three decimal strings");
      coords.push_back({detail::real_from(c[0], ip + "/coords/0"), detail::real_from(c[1], ip + "/coords/1"),
                        detail::real_from(c[2], ip + "/coords/2")});
    }
  };
  read_side("points", cfg.point_labels, cfg.points);
  read_side("lines", cfg.line_labels, cfg.lines);
  const Json& inc = detail::require(j, "incidences", path);
  for (std::size_t i = 0; i < inc.size(); ++i) {
    std::string ip = path + "/incidences/" + std::to_string(i);
    if (!inc[i].is_array() || inc[i].size() != 2 || !inc[i][0].is_number_integer() || !inc[i][1].is_number_integer())
      throw SchemaError(ip + ": expected [point index, line index]");
    int p = inc[i][0].get<int>(), l = inc[i][1].get<int>();
    if (p < 0 || l < 0 || p >= static_cast<int>(cfg.points.size()) || l >= static_cast<int>(cfg.lines.size()))
      throw SchemaError(ip + ": index out of range");
    cfg.incidences.push_back({p, l});
  }
  if (j.contains("symmetry_order") && j["symmetry_order"].is_number_integer()) cfg.symmetry_order = j["symmetry_order"].get<int>();
  auto opt_double = [&](const char* key) {
    return j.contains(key) && j[key].is_string() ? std::stod(j[key].get<std::string>()) : 0.0;
  };
  cfg.max_incidence_residual = opt_double("max_incidence_residual");
  cfg.min_point_separation = opt_double("min_point_separation");
  cfg.min_line_separation = opt_double("min_line_separation");
  return cfg;
}

inline Json to_json(const SolutionCandidate& c, int bits) {
  const int digits = decimal_digits(bits);
  Json j;
  j["x"] = c.x.str(digits);
  j["z"] = c.z.str(digits);
  if (c.exact_x) j["exact"] = Json::array({c.exact_x->str(), c.exact_z->str()});
  j["status"] = to_string(c.status);
  j["witnesses"] = c.witnesses;
  j["singular"] = c.singular;
  j["residual"] = format_double(c.residual);
  j["det3"] = to_string(c.det3);
  j["det4"] = to_string(c.det4);
  j["ladder"] = Json::array();
  for (const auto& r : c.ladder) j["ladder"].push_back({{"bits", r.bits}, {"det3", r.det3.str(8)}, {"det4", r.det4.str(8)}});
  return j;
}

inline Json to_json(const ParameterVector& p) {
  Json j = Json::array();
  for (int v : p) j.push_back(v);
  return j;
}

inline ParameterVector parameters_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 15) throw SchemaError(path + ": expected 15 integers");
  ParameterVector p{};
  for (int i = 0; i < 15; ++i) {
    if (!j[i].is_number_integer()) throw SchemaError(path + "/" + std::to_string(i) + ": expected integer");
    p[i] = j[i].get<int>();
  }
  return p;
}

inline Json to_json(const EnumerationRecord& r) {
  return {{"params", to_json(r.params)},     {"certificate", r.certificate.hex()}, {"aut_order", r.aut_order},
          {"self_dual", r.self_dual},         {"connected", r.connected},           {"representatives", r.representatives}};
}

inline Json to_json(const GroupSummary& s) {
  return {{"order", s.order}, {"preserving", s.preserving}, {"reversing", s.reversing}};
}

// Self-describing document: {"schema_version", "kind", "provenance", "payload"}.
inline Json make_document(const std::string& kind, Json payload, Json provenance = Json::object()) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  j["provenance"] = std::move(provenance);
  j["payload"] = std::move(payload);
  return j;
}

inline const Json& document_payload(const Json& doc, const std::string& kind) {
  int v = detail::require_int(doc, "schema_version", "");
  if (v != kSchemaVersion) throw SchemaError("/schema_version: unsupported version " + std::to_string(v));
  std::string k = detail::require_string(doc, "kind", "");
  if (!kind.empty() && k != kind) throw SchemaError("/kind: expected \"" + kind + "\", found \"" + k + "\"");
  return detail::require(doc, "payload", "");
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

inline void write_json_file(const std::string& path, const Json& j) { write_text_file(path, j.dump(2) + "\n"); }

}  // namespace polycfg
