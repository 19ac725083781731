#include <gtest/gtest.h>

#include <regex>

#include "oracles.hpp"

using namespace polycfg;

namespace {

const GeometricConfiguration& b_configuration() {
  static const GeometricConfiguration cfg = realize(3, b_parameters()).front().configuration;
  return cfg;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Json, ConfigurationRoundTrip) {
  const auto& cfg = b_configuration();
  Json doc = make_document("configuration", to_json(cfg));
  Json reread = Json::parse(doc.dump(2));
  auto back = configuration_from_json(document_payload(reread, "configuration"), "/payload");
  ASSERT_EQ(back.points.size(), cfg.points.size());
  EXPECT_EQ(back.point_labels, cfg.point_labels);
  EXPECT_EQ(back.line_labels, cfg.line_labels);
  EXPECT_EQ(back.incidences, cfg.incidences);
  EXPECT_EQ(back.bits, cfg.bits);
  PrecisionScope scope(Precision{cfg.bits});
  for (std::size_t i = 0; i < cfg.points.size(); ++i)
    EXPECT_LT(projective_distance(back.points[i], cfg.points[i]).to_double(), 1e-70);
  // re-verifiable without recomputation
  EXPECT_TRUE(check_strong(back, 1e-60, 1e-6).ok);
  EXPECT_EQ(to_json(back).dump(), to_json(cfg).dump());
}

TEST(Json, IncidenceRoundTrip) {
  auto s = lift(rlg_b_template(3, b_parameters())).structure;
  auto back = incidence_from_json(Json::parse(to_json(s).dump()));
  EXPECT_EQ(back.incidence_set(), s.incidence_set());
  EXPECT_EQ(back.points, s.points);
  Json bare = to_json(s);
  bare["incidences"][0][0] = s.incidences[0].first.str();
  EXPECT_NO_THROW(incidence_from_json(bare));
}

TEST(Json, SchemaErrorsCarryThePath) {
  Json doc = make_document("configuration", to_json(b_configuration()));
  Json bad = doc;
  bad["payload"]["points"][3]["coords"][1] = "oops";
  try {
    configuration_from_json(document_payload(bad, "configuration"), "/payload");
    FAIL() << "expected a schema error";
  } catch (const SchemaError& e) {
    EXPECT_NE(std::string(e.what()).find("/payload/points/3/coords/1"), std::string::npos) << e.what();
  }
  Json old = doc;
  old["schema_version"] = 99;
  EXPECT_THROW(document_payload(old, "configuration"), SchemaError);
  EXPECT_THROW(document_payload(doc, "catalog"), SchemaError);
  Json missing = doc;
  missing["payload"].erase("lines");
  EXPECT_THROW(configuration_from_json(missing["payload"]), SchemaError);
  Json range = doc;
  range["payload"]["incidences"][0] = Json::array({0, 999});
  EXPECT_THROW(configuration_from_json(range["payload"]), SchemaError);
}

TEST(Json, ParametersAndRecords) {
  auto p = b_parameters();
  EXPECT_EQ(parameters_from_json(to_json(p), ""), p);
  EXPECT_THROW(parameters_from_json(Json::array({1, 2}), "/p"), SchemaError);
  SolutionCandidate c = solve_system(3, gr_row_parameters()).front();
  Json j = to_json(c, 256);
  EXPECT_EQ(j["status"], "DEGENERATE");
  EXPECT_TRUE(j.contains("exact"));
}

TEST(Json, DocumentsHaveNoTimestampByDefault) {
  Json doc = make_document("catalog", Json::object());
  EXPECT_EQ(doc.dump(), R"({"schema_version":1,"kind":"catalog","provenance":{},"payload":{}})");
}

TEST(Svg, DeterministicAndComplete) {
  const auto& cfg = b_configuration();
  std::string a = render_svg(cfg), b = render_svg(cfg);
  EXPECT_EQ(a, b);
  EXPECT_EQ(count(a, "<circle"), 21u);
  EXPECT_EQ(count(a, "<line"), 21u);
  EXPECT_NE(a.find(class_color("R", true)), std::string::npos);
  EXPECT_NE(a.find("<title>M_2</title>"), std::string::npos);
}

TEST(Svg, CircleAndMirrorAreDashed) {
  SvgStyle style;
  style.circle_radius = 1.0;
  style.mirror_angle = M_PI / 2;
  std::string s = render_svg(b_configuration(), style);
  EXPECT_EQ(count(s, "stroke-dasharray"), 2u);
  EXPECT_EQ(count(s, "<circle"), 22u);
}

TEST(Svg, EmptyConfigurationGivesAnEmptyCanvas) {
  std::string s = render_svg(GeometricConfiguration{});
  EXPECT_NE(s.find("<svg"), std::string::npos);
  EXPECT_EQ(count(s, "<circle"), 0u);
  EXPECT_EQ(count(s, "<line"), 0u);
}

TEST(Svg, LinesAreClippedToTheInflatedBox) {
  std::string s = render_svg(b_configuration());
  std::regex coord(R"(x[12]="(-?[0-9.]+)\" y[12]="(-?[0-9.]+)\")");
  for (auto it = std::sregex_iterator(s.begin(), s.end(), coord); it != std::sregex_iterator(); ++it) {
    double x = std::stod((*it)[1]), y = std::stod((*it)[2]);
    EXPECT_GE(x, -0.001);
    EXPECT_LE(x, 800.001);
    EXPECT_GE(y, -0.001);
    EXPECT_LE(y, 800.001);
  }
  auto seg = detail::clip_line(1, 0, -0.5, 0, 1, 0, 1);
  ASSERT_TRUE(seg);
  EXPECT_DOUBLE_EQ((*seg)[0], 0.5);
  EXPECT_DOUBLE_EQ((*seg)[3], 1.0);
  EXPECT_FALSE(detail::clip_line(1, 0, -5, 0, 1, 0, 1));
}

TEST(Report, TableWithoutSolverMarksGaps) {
  auto recs = enumerate_z3();
  auto rep = table2_report(recs, false, {});
  ASSERT_EQ(rep.rows.size(), 17u);
  EXPECT_FALSE(rep.complete);
  EXPECT_EQ(rep.configuration_count, 18);
  for (const auto& r : rep.rows) {
    EXPECT_EQ(r.ndsols(), '?');
    EXPECT_TRUE(r.enumeration_index.has_value());
    const auto& ref = table2_reference()[r.item - 1];
    EXPECT_EQ(r.aut_order, ref.aut_order) << "row " << r.item;
    EXPECT_EQ(r.self_dual, ref.self_dual) << "row " << r.item;
  }
  EXPECT_EQ(rep.rows[0].aut_order, 12);
  EXPECT_EQ(rep.rows[2].aut_order, 672);
  auto text = format_table2(rep);
  EXPECT_NE(text.find("configurations counting dual pairs: 18"), std::string::npos);
}
