#include <gtest/gtest.h>

#include <functional>

#include "charvar/report.hpp"
#include "fixtures.hpp"

using namespace charvar;

namespace {

bool has_float(const nlohmann::json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& v : j) if (has_float(v)) return true;
  return false;
}

}  // namespace

TEST(Report, LatticeDocument) {
  const Arrangement arr = fixture::suciu();
  const auto doc = lattice_report(arr, build_lattice(arr));
  EXPECT_EQ(doc["kind"], "lattice");
  EXPECT_EQ(doc["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(doc["tool_version"], tool_version());
  EXPECT_EQ(doc["lattice"]["triples"], 6);
  EXPECT_EQ(doc["lattice"]["quadruples"], 1);
  EXPECT_EQ(doc["lattice"]["doubles"], 4);
  EXPECT_FALSE(has_float(doc));
}

TEST(Report, CensusIsDeterministic) {
  const Arrangement arr = fixture::suciu();
  const std::vector<Pencil> user{fixture::fw_pencil(arr)};
  const std::string a = render(census_report(run_census(arr, user)));
  const std::string b = render(census_report(run_census(arr, user)));
  EXPECT_EQ(a, b);
  const auto doc = nlohmann::json::parse(a);
  EXPECT_FALSE(has_float(doc));
  EXPECT_EQ(doc["summary"]["translated"], 1);
  EXPECT_EQ(doc["summary"]["through_trivial"], 12);
  EXPECT_TRUE(doc["verified"].get<bool>());
  EXPECT_EQ(doc["seed"], 1);
  EXPECT_TRUE(doc.contains("shear"));
}

TEST(Report, PencilDocument) {
  const Arrangement arr = fixture::suciu();
  const auto doc = pencil_report(PencilAnalysis(fixture::fw_pencil(arr)));
  const auto& p = doc["pencil"];
  EXPECT_EQ(p["translation_group"]["group"], "Z/2");
  EXPECT_EQ(p["base"]["euler_characteristic"], 0);
  ASSERT_EQ(p["components"].size(), 1u);
  EXPECT_EQ(p["components"][0]["sigma"], nlohmann::json::array({"1"}));
  EXPECT_EQ(p["components"][0]["generic_h1"], 1);
  EXPECT_EQ(p["corollary1"]["case"], "(ii)");
}

TEST(Report, SheafDocument) {
  SheafScanOptions o;
  o.g_max = 1;
  o.k_max = 2;
  o.marks_max = 1;
  o.order_max = 3;
  const auto doc = sheaf_report(o, sheaf_scan(o));
  EXPECT_TRUE(doc["holds"].get<bool>());
  EXPECT_EQ(doc["witness"]["sigma"], nlohmann::json::array({"1"}));
  EXPECT_FALSE(has_float(doc));
}

TEST(Report, RenderEndsWithNewline) {
  const std::string s = render(nlohmann::json{{"b", 1}, {"a", 2}});
  EXPECT_EQ(s.back(), '\n');
  EXPECT_LT(s.find("\"a\""), s.find("\"b\""));
}
