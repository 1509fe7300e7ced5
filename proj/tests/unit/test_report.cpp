#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "report/commands.hpp"
#include "report/svg.hpp"
#include "rtk/serialize.hpp"

using namespace rtk;
using rtk::report::RunConfig;
using rtk::testing::fixture;
using rtk::testing::scratch_dir;
using rtk::testing::slurp;
namespace fs = std::filesystem;

namespace {

StateSymbol S(const char* text) { return *parse_state(text); }

RunConfig narrative_config(const fs::path& out) {
  RunConfig cfg;
  cfg.issues = fixture("narrative/issues.jsonl");
  cfg.commits = fixture("narrative/commits.jsonl");
  cfg.manifest = fixture("narrative/manifest.json");
  cfg.out_dir = out;
  cfg.k = 1;
  cfg.min_size = 1;
  return cfg;
}

}  // namespace

TEST(Report, BuildNarrative) {
  const fs::path out = scratch_dir("build-narrative");
  std::ostringstream log;
  report::cmd_build(narrative_config(out), log);
  const Trajectory t = trajectory_from_json(slurp(out / "trajectories/issues/solr-5.0.0.json"));
  const auto dss = to_dss(t).states;
  ASSERT_GE(dss.size(), 6u);
  EXPECT_EQ(std::vector<StateSymbol>(dss.begin(), dss.begin() + 6),
            (std::vector<StateSymbol>{S("B"), S("BI"), S("BIF"), S("F"), S("X"), S("T")}));
  const auto summary = nlohmann::json::parse(slurp(out / "build_summary.json"));
  const auto& r = summary["releases"][0];
  EXPECT_EQ(r["issues_resolved"], 8);
  EXPECT_EQ(r["commits_tangled"], 1);
  EXPECT_EQ(r["commits_dss"], "B-F-I-T-B-X-F-B-I-T-I");
  EXPECT_TRUE(fs::exists(out / "trajectories/commits/solr-5.0.0.json"));
}

TEST(Report, BuildDetectsWindowsWithoutManifest) {
  const fs::path out = scratch_dir("build-detect");
  RunConfig cfg = narrative_config(out);
  cfg.manifest.clear();
  std::ostringstream log;
  report::cmd_build(cfg, log);
  const auto manifest = nlohmann::json::parse(slurp(out / "manifest.json"));
  EXPECT_EQ(manifest["releases"][0]["id"], "solr-5.0.0");
  EXPECT_EQ(manifest["releases"][0]["ending"], "2015-04-11T00:00:00Z");
}

TEST(Report, EmptyIssueFile) {
  const fs::path out = scratch_dir("build-empty");
  RunConfig cfg = narrative_config(out);
  cfg.issues = fixture("empty_issues.jsonl");
  std::ostringstream log;
  report::cmd_build(cfg, log);
  const Trajectory t = trajectory_from_json(slurp(out / "trajectories/issues/solr-5.0.0.json"));
  ASSERT_EQ(t.segments.size(), 1u);
  EXPECT_EQ(t.segments[0].state, S("Z"));
  EXPECT_NE(log.str().find("warning: issue export is empty"), std::string::npos);
  const auto summary = nlohmann::json::parse(slurp(out / "build_summary.json"));
  EXPECT_FALSE(summary["warnings"].empty());
}

TEST(Report, CorruptIssueFileNamesLine) {
  RunConfig cfg = narrative_config(scratch_dir("build-corrupt"));
  cfg.issues = fixture("corrupt_issues.jsonl");
  std::ostringstream log;
  try {
    report::cmd_build(cfg, log);
    FAIL();
  } catch (const report::StageError& e) {
    EXPECT_NE(std::string(e.what()).find("line 7"), std::string::npos) << e.what();
  }
}

TEST(Report, AnalyzeWithoutBuild) {
  RunConfig cfg = narrative_config(scratch_dir("analyze-missing"));
  std::ostringstream log;
  EXPECT_THROW(report::cmd_analyze(cfg, log), report::StageError);
  EXPECT_THROW(report::cmd_render(cfg, log), report::StageError);
}

TEST(Report, ConfigValidation) {
  RunConfig cfg;
  cfg.positions = 0;
  EXPECT_THROW(report::validate(cfg), report::StageError);
  cfg = RunConfig{};
  cfg.indel = -1;
  EXPECT_THROW(report::validate(cfg), report::StageError);
  cfg = RunConfig{};
  EXPECT_NO_THROW(report::validate(cfg));
}

TEST(Report, DetectReleasesToStdout) {
  std::ostringstream out, log;
  const auto manifest =
      report::cmd_detect_releases(fixture("release_log.jsonl"), {}, out, log);
  EXPECT_EQ(manifest.releases.size(), 2u);
  const auto doc = nlohmann::json::parse(out.str());
  EXPECT_EQ(doc["releases"][1]["id"], "proj-1.1");
}

TEST(Report, AnalyzeNarrativeWritesEverything) {
  const fs::path out = scratch_dir("analyze-narrative");
  std::ostringstream log;
  report::cmd_build(narrative_config(out), log);
  report::cmd_analyze(narrative_config(out), log);
  for (const char* flavor : {"issues", "commits"}) {
    const fs::path dir = out / "analysis" / flavor;
    for (const char* f : {"transition_matrix.json", "modal_dss.json", "modal_normalized.json",
                          "dss_frequency.json", "scm.json", "distance_matrix.csv",
                          "distance_matrix.json", "clusters.csv", "patterns.json"}) {
      EXPECT_TRUE(fs::exists(dir / f)) << dir / f;
    }
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.path().extension() != ".svg") continue;
      const std::string svg = slurp(entry.path());
      EXPECT_TRUE(rtk::testing::well_formed_xml(svg)) << entry.path();
      EXPECT_NE(svg.find("data-legend=\"BIFT\""), std::string::npos) << entry.path();
    }
  }
  const auto modal = nlohmann::json::parse(slurp(out / "analysis/issues/modal_dss.json"));
  EXPECT_EQ(modal["positions"][0]["state"], "B");
}

TEST(Svg, LegendAndColors) {
  EXPECT_EQ(report::state_color(S("B")), "#40e0d0");
  EXPECT_EQ(report::state_color(S("Z")), "#ffffff");
  std::vector<report::SequenceRow> rows{{"r<1>&", {S("B"), S("BI")}}};
  const std::string svg = report::sequence_index_svg("t", rows);
  EXPECT_TRUE(rtk::testing::well_formed_xml(svg));
  EXPECT_NE(svg.find("r&lt;1&gt;&amp;"), std::string::npos);
  std::size_t legend = 0;
  for (std::size_t at = 0; (at = svg.find("data-legend=", at)) != std::string::npos; ++at) ++legend;
  EXPECT_EQ(legend, 17u);
  std::set<std::string> colors;
  for (StateSymbol s : full_alphabet()) colors.insert(std::string(report::state_color(s)));
  EXPECT_EQ(colors.size(), 17u);
}

TEST(Report, FileStem) {
  EXPECT_EQ(report::file_stem("solr-5.0.0"), "solr-5.0.0");
  EXPECT_EQ(report::file_stem("a/b c"), report::file_stem("a/b c"));
  EXPECT_EQ(report::file_stem("a/b").find('/'), std::string::npos);
}
