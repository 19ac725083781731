// polycfg: enumerate, lift, realize and draw polycyclic (n_4) configurations.

#include <chrono>
#include <cmath>
#include <ctime>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polycfg.hpp"

using namespace polycfg;

namespace {

constexpr int kExitPass = 0, kExitFail = 1, kExitUndecided = 2, kExitUsage = 3;

struct Globals {
  int bits = 256;
  std::optional<int> tol_exponent;  // incidence tolerance 2^-e, default bits/2
  int jobs = 1;
  std::string out;
  bool timestamp = false;
  std::string command_line;

  double incidence_tol() const { return std::ldexp(1.0, -std::min(tol_exponent.value_or(bits / 2), 1000)); }
  SolveOptions solve() const {
    SolveOptions so;
    so.precision = {bits};
    so.jobs = jobs;
    return so;
  }
};

Json provenance(const Globals& g) {
  Json p{{"command", g.command_line}, {"bits", g.bits}};
  if (g.timestamp) {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    p["timestamp"] = buf;
  }
  return p;
}

void emit(const Globals& g, const std::string& kind, Json payload) {
  Json doc = make_document(kind, std::move(payload), provenance(g));
  if (g.out.empty()) std::cout << doc.dump(2) << "\n";
  else write_json_file(g.out, doc);
}

int status_exit(int full, bool undecided) {
  if (full > 0) return kExitPass;
  return undecided ? kExitUndecided : kExitFail;
}

bool undecided(const SolutionCandidate& c) {
  return c.status == Status::Partial && (c.det3 == Certification::Undecided || c.det4 == Certification::Undecided);
}

struct ParamArgs {
  int m = 3;
  std::string params;
  std::string family;
  int a = 1, b = 1;

  void add(CLI::App* app) {
    app->add_option("-m,--modulus", m, "cyclic group order");
    app->add_option("-p,--params", params, "15 voltages a c d e f g q a' c' d' e' f' g' q' t (default B for m = 3)");
    app->add_option("--family", family, "F1 or F2 instead of --params")->check(CLI::IsMember({"F1", "F2"}));
    app->add_option("-a", a, "family parameter a");
    app->add_option("-b", b, "family parameter b");
  }
  ParameterVector resolve() {
    if (!family.empty()) return family_params({family == "F1" ? Family::F1 : Family::F2, m, a, b});
    if (params.empty()) return m == 3 ? b_parameters() : throw ValidationError("--params or --family required");
    return parse_parameters(params);
  }
};

int cmd_enumerate(const Globals& g, int m, bool connected) {
  EnumerationFilters f;
  f.require_connected = connected;
  f.jobs = g.jobs;
  EnumerationStats stats;
  auto records = enumerate_template(m, f, &stats);
  Json payload{{"m", m}, {"candidates", stats.candidates}, {"girth_survivors", stats.girth_survivors}};
  payload["records"] = Json::array();
  for (const auto& r : records) payload["records"].push_back(to_json(r));
  emit(g, "catalog", std::move(payload));
  std::cerr << records.size() << " classes\n";
  return kExitPass;
}

int cmd_lift(const Globals& g, ParamArgs& pa) {
  auto p = pa.resolve();
  auto rep = family_lift_report(pa.m, p);
  Json payload{{"m", pa.m}, {"params", to_json(p)}, {"liftable", rep.liftable}};
  if (!rep.liftable) {
    payload["error"] = rep.error;
    emit(g, "lift", std::move(payload));
    return kExitFail;
  }
  payload["girth"] = rep.girth;
  payload["connected"] = rep.connected;
  payload["nk_ok"] = rep.nk.ok;
  payload["violations"] = rep.nk.violations;
  payload["certificate"] = rep.certificate.hex();
  Lift l = lift(rlg_b_template(pa.m, p));
  payload["aut"] = to_json(automorphisms(l.graph));
  payload["incidence"] = to_json(l.structure);
  emit(g, "lift", std::move(payload));
  return rep.nk.ok ? kExitPass : kExitFail;
}

int cmd_realize(const Globals& g, ParamArgs& pa, const std::string& svg) {
  auto p = pa.resolve();
  auto opt = g.solve();
  ResidualSystem sys(pa.m, p);
  auto cands = find_roots(sys, opt);
  Json payload{{"m", pa.m}, {"params", to_json(p)}, {"candidates", Json::array()}, {"realizations", Json::array()}};
  int full = 0;
  bool undec = false;
  std::optional<GeometricConfiguration> first;
  for (auto& c : cands) {
    classify(c, sys, g.bits);
    undec = undec || undecided(c);
    payload["candidates"].push_back(to_json(c, g.bits));
    if (c.status != Status::Full) continue;
    PrecisionScope scope(opt.precision);
    auto cfg = configuration_from_scene(build_scene(pa.m, p, c.x, c.z), to_string(p), g.bits);
    finalize_configuration(cfg);
    ++full;
    payload["realizations"].push_back(to_json(cfg));
    if (!first) first = cfg;
  }
  emit(g, "realization", std::move(payload));
  if (!svg.empty() && first) write_text_file(svg, render_svg(*first));
  std::cerr << cands.size() << " candidates, " << full << " full\n";
  return status_exit(full, undec);
}

int cmd_synthesize(const Globals& g, const std::string& svg) {
  Precision prec{g.bits};
  auto syn = bisect_realize(SyntheticFrame::standard(prec), b_parameters(), prec);
  auto cfg = syn.configuration;
  cfg.name = "B(21_4) synthetic";
  Json payload{{"xpos", syn.xpos.str(decimal_digits(g.bits))},
               {"gap", syn.gap.str(8)},
               {"omega", syn.scene.omega.radius.str(decimal_digits(g.bits))},
               {"configuration", to_json(cfg)}};
  emit(g, "synthesis", std::move(payload));
  if (!svg.empty()) {
    SvgStyle style;
    style.circle_radius = syn.scene.omega.radius.to_double();
    auto sym = geometric_symmetries(cfg);
    style.mirror_angle = sym.mirror_angles.empty() ? M_PI / 2 : sym.mirror_angles.front();
    write_text_file(svg, render_svg(cfg, style));
  }
  return kExitPass;
}

int cmd_family_scan(const Globals& g, const std::string& fam, int m_lo, int m_hi) {
  auto specs = family_specs(fam == "F1" ? Family::F1 : Family::F2, m_lo, m_hi);
  Json payload{{"family", fam}, {"rows", Json::array()}};
  int realized = 0;
  for (const auto& spec : specs) {
    auto row = scan_spec(spec, g.solve());
    Json r{{"spec", spec.str()},         {"params", to_json(row.params)}, {"liftable", row.lift.liftable},
           {"girth", row.lift.girth},     {"nk_ok", row.lift.nk.ok},       {"full", row.full},
           {"partial", row.partial},      {"degenerate", row.degenerate},
           {"best_separation", format_double(row.best_separation)},
           {"best_residual", format_double(row.best_residual)}};
    if (!row.error.empty()) r["error"] = row.error;
    payload["rows"].push_back(std::move(r));
    realized += !row.realizations.empty();
    std::cerr << spec.str() << ": " << row.full << " full\n";
  }
  payload["realized"] = realized;
  emit(g, "family-scan", std::move(payload));
  return kExitPass;
}

int cmd_report(const Globals& g, bool solve, const std::string& catalog) {
  std::vector<EnumerationRecord> records;
  if (!catalog.empty()) {
    Json doc = read_json_file(catalog);
    const Json& payload = document_payload(doc, "catalog");
    for (std::size_t i = 0; i < payload.at("records").size(); ++i) {
      const Json& r = payload["records"][i];
      EnumerationRecord rec;
      rec.params = parameters_from_json(r.at("params"), "/payload/records/" + std::to_string(i) + "/params");
      rec.certificate = canonical_form(lift(rlg_b_template(3, rec.params)).graph, true).certificate;
      rec.aut_order = r.value("aut_order", 0L);
      rec.self_dual = r.value("self_dual", false);
      rec.connected = r.value("connected", false);
      records.push_back(rec);
    }
  } else {
    EnumerationFilters f;
    f.jobs = g.jobs;
    records = enumerate_z3(f);
  }
  auto rep = table2_report(records, solve, g.solve());
  std::cout << format_table2(rep);
  if (!g.out.empty()) emit(g, "table2", to_json(rep, g.bits));
  if (!solve) return kExitUndecided;
  return rep.complete ? kExitPass : kExitFail;
}

GeometricConfiguration load_configuration(const std::string& in) {
  Json doc = read_json_file(in);
  std::string kind = detail::require_string(doc, "kind", "");
  const Json& payload = document_payload(doc, "");
  if (kind == "configuration") return configuration_from_json(payload, "/payload");
  if (kind == "synthesis")
    return configuration_from_json(detail::require(payload, "configuration", "/payload"), "/payload/configuration");
  if (kind == "realization") {
    const Json& rs = detail::require(payload, "realizations", "/payload");
    if (!rs.is_array() || rs.empty()) return {};
    return configuration_from_json(rs[0], "/payload/realizations/0");
  }
  throw SchemaError("/kind: no configuration in a \"" + kind + "\" document");
}

int cmd_render(const std::string& in, const std::string& svg, std::optional<double> circle,
               std::optional<double> mirror) {
  SvgStyle style;
  style.circle_radius = circle;
  style.mirror_angle = mirror;
  std::string text = render_svg(load_configuration(in), style);
  if (svg.empty()) std::cout << text;
  else write_text_file(svg, text);
  return kExitPass;
}

int verify_file(const Globals& g, const std::string& in, std::optional<double> distinct) {
  auto cfg = load_configuration(in);
  double dt = distinct.value_or(std::ldexp(1.0, -std::min(cfg.bits / 4, 1000)));
  auto rep = check_strong(cfg, g.incidence_tol(), dt);
  Json out{{"ok", rep.ok},
           {"message", rep.message},
           {"max_incidence_residual", format_double(rep.max_incidence_residual)},
           {"min_point_separation", format_double(rep.min_point_separation)},
           {"min_line_separation", format_double(rep.min_line_separation)}};
  emit(g, "verification", std::move(out));
  return rep.ok ? kExitPass : kExitFail;
}

int cmd_verify(const Globals& g, const std::vector<int>& only, int synthetic_bits) {
  AcceptanceOptions opt;
  opt.bits = g.bits;
  opt.synthetic_bits = std::max(synthetic_bits, g.bits);
  opt.jobs = g.jobs;
  std::vector<CriterionResult> results;
  for (const auto& c : acceptance_criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    results.push_back(run_criterion(c, opt));
    std::cout << format_result(results.back()) << std::endl;
  }
  int code = acceptance_exit_code(results);
  if (!g.out.empty()) {
    Json payload{{"criteria", Json::array()}, {"exit_code", code}};
    for (const auto& r : results) payload["criteria"].push_back(to_json(r));
    emit(g, "acceptance", std::move(payload));
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polycyclic (n_4) configuration toolkit"};
  app.require_subcommand(1);
  Globals g;
  for (int i = 0; i < argc; ++i) g.command_line += (i ? " " : "") + std::string(i ? argv[i] : "polycfg");
  app.add_option("--bits", g.bits, "working precision in bits")->check(CLI::Range(64, 16384));
  app.add_option("--tol-exponent", g.tol_exponent, "incidence tolerance 2^-e (default bits/2)")->check(CLI::Range(1, 16384));
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--out", g.out, "write the JSON document here instead of stdout");
  app.add_flag("--timestamp", g.timestamp, "record the wall-clock time in provenance");

  auto* en = app.add_subcommand("enumerate", "enumerate the (7m_4) Levi graphs of the B template up to isomorphism");
  int en_m = 3;
  bool en_connected = false;
  en->add_option("-m,--modulus", en_m)->check(CLI::Range(3, 12));
  en->add_flag("--connected", en_connected, "keep connected Levi graphs only");

  auto* li = app.add_subcommand("lift", "lift a voltage assignment and report girth, symmetry and incidences");
  ParamArgs li_args;
  li_args.add(li);

  auto* re = app.add_subcommand("realize", "solve the two-parameter system and build every full realization");
  ParamArgs re_args;
  std::string re_svg;
  re_args.add(re);
  re->add_option("--svg", re_svg, "draw the first full realization");

  auto* sy = app.add_subcommand("synthesize", "straightedge-and-compass construction of B(21_4)");
  std::string sy_svg;
  sy->add_option("--svg", sy_svg, "draw with the reciprocity circle and mirror line");

  auto* fs = app.add_subcommand("family-scan", "lift and realize every member of F1 or F2 in a modulus range");
  std::string fs_family = "F1";
  int fs_lo = 3, fs_hi = 6;
  fs->add_option("--family", fs_family)->check(CLI::IsMember({"F1", "F2"}));
  fs->add_option("--m-min", fs_lo)->check(CLI::Range(3, 64));
  fs->add_option("--m-max", fs_hi)->check(CLI::Range(3, 64));

  auto* rp = app.add_subcommand("report", "the Z_3 table: parameters, |Aut|, self-duality, realizability");
  bool rp_no_solve = false;
  std::string rp_catalog;
  rp->add_flag("--no-solve", rp_no_solve, "skip the solver; the realizability column shows ?");
  rp->add_option("--catalog", rp_catalog, "catalog written by enumerate")->check(CLI::ExistingFile);

  auto* rn = app.add_subcommand("render", "draw a configuration, realization or synthesis document as SVG");
  std::string rn_in, rn_svg;
  std::optional<double> rn_circle, rn_mirror;
  rn->add_option("--in", rn_in)->required()->check(CLI::ExistingFile);
  rn->add_option("--svg", rn_svg, "output file (default stdout)");
  rn->add_option("--circle", rn_circle, "dashed circle radius");
  rn->add_option("--mirror", rn_mirror, "dashed mirror line angle in radians");

  auto* ve = app.add_subcommand("verify", "run the acceptance criteria, or re-check a configuration file");
  std::vector<int> ve_only;
  std::string ve_in;
  int ve_synthetic_bits = 512;
  std::optional<double> ve_distinct;
  ve->add_option("--criterion", ve_only, "run only these criteria")->check(CLI::Range(1, 13));
  ve->add_option("--synthetic-bits", ve_synthetic_bits)->check(CLI::Range(64, 16384));
  ve->add_option("--in", ve_in, "configuration document to re-verify")->check(CLI::ExistingFile);
  ve->add_option("--distinct-tol", ve_distinct, "minimum separation of distinct elements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*en) return cmd_enumerate(g, en_m, en_connected);
    if (*li) return cmd_lift(g, li_args);
    if (*re) return cmd_realize(g, re_args, re_svg);
    if (*sy) return cmd_synthesize(g, sy_svg);
    if (*fs) return cmd_family_scan(g, fs_family, fs_lo, fs_hi);
    if (*rp) return cmd_report(g, !rp_no_solve, rp_catalog);
    if (*rn) return cmd_render(rn_in, rn_svg, rn_circle, rn_mirror);
    if (*ve) return ve_in.empty() ? cmd_verify(g, ve_only, ve_synthetic_bits) : verify_file(g, ve_in, ve_distinct);
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitFail;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
