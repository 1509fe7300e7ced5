#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "rtk/errors.hpp"
#include "rtk/serialize.hpp"
#include "rtk/synthetic.hpp"
#include "rtk/trajectory.hpp"

using namespace rtk;

namespace {

StateSymbol S(const char* text) { return *parse_state(text); }

}  // namespace

TEST(Serialize, IssueTrajectoryRoundTrip) {
  Trajectory t;
  t.release_id = "solr-5.0.0";
  t.window = ReleaseWindow{"solr-5.0.0", parse_timestamp("2015-01-01T00:00:00Z"),
                           parse_timestamp("2015-01-03T00:00:00Z")};
  const std::int64_t d0 = to_seconds(t.window.inception);
  t.segments = {{S("B"), d0, d0 + 3600}, {S("BIF"), d0 + 3600, d0 + 2 * 86400}};
  const std::string text = trajectory_to_json(t);
  const auto doc = nlohmann::json::parse(text);
  EXPECT_EQ(doc["flavor"], "issues");
  EXPECT_EQ(doc["segments"][0]["end"], "2015-01-01T01:00:00Z");
  EXPECT_EQ(doc["segments"][1]["state"], "BIF");
  const Trajectory back = trajectory_from_json(text);
  EXPECT_EQ(back.segments, t.segments);
  EXPECT_EQ(back.window, t.window);
  EXPECT_EQ(trajectory_to_json(back), text);
}

TEST(Serialize, CommitTrajectoryUsesIndices) {
  Trajectory t;
  t.release_id = "r";
  t.flavor = Flavor::CommitsBased;
  t.window = ReleaseWindow{"r", parse_timestamp("2015-01-01T00:00:00Z"),
                           parse_timestamp("2015-01-03T00:00:00Z")};
  t.segments = {{S("B"), 0, 2}, {S("I"), 2, 5}};
  const auto doc = nlohmann::json::parse(trajectory_to_json(t));
  EXPECT_EQ(doc["segments"][1]["start"], 2);
  EXPECT_EQ(trajectory_from_json(trajectory_to_json(t)).segments, t.segments);
}

TEST(Serialize, TrajectoryFromJsonRejectsBadInput) {
  EXPECT_THROW(trajectory_from_json("{"), Error);
  EXPECT_THROW(trajectory_from_json(R"({"release_id":"r","flavor":"issues"})"), Error);
  EXPECT_THROW(trajectory_from_json(
                   R"({"release_id":"r","flavor":"commits","window":{"inception":"2015-01-01T00:00:00Z","ending":"2015-01-02T00:00:00Z"},"segments":[{"state":"BI","start":0,"end":1}]})"),
               Error);
  EXPECT_THROW(trajectory_from_json(
                   R"({"release_id":"r","flavor":"commits","window":{"inception":"2015-01-01T00:00:00Z","ending":"2015-01-02T00:00:00Z"},"segments":[{"state":"Q","start":0,"end":1}]})"),
               Error);
}

TEST(Serialize, CorpusRoundTrip) {
  SyntheticOptions opts;
  opts.family_sizes = {2, 2, 1, 1, 1, 1};
  const SyntheticCorpus corpus = generate_corpus(opts);
  std::istringstream issues_in(issues_to_jsonl(corpus.issues));
  const auto issues = parse_issues(issues_in);
  ASSERT_EQ(issues.size(), corpus.issues.size());
  for (std::size_t k = 0; k < issues.size(); ++k) {
    EXPECT_EQ(issues[k].id, corpus.issues[k].id);
    EXPECT_EQ(issues[k].type, corpus.issues[k].type);
    EXPECT_EQ(issues[k].resolved, corpus.issues[k].resolved);
    EXPECT_EQ(issues[k].parent_id, corpus.issues[k].parent_id);
  }
  std::istringstream commits_in(commits_to_jsonl(corpus.commits));
  EXPECT_EQ(parse_commits(commits_in).size(), corpus.commits.size());
  std::istringstream manifest_in(manifest_to_json(corpus.manifest));
  EXPECT_EQ(parse_manifest(manifest_in).releases, corpus.manifest.releases);
}

TEST(Serialize, CsvLayouts) {
  DistanceMatrix dm;
  dm.release_ids = {"a", "b"};
  dm.distances = SquareMatrix<double>(2, 0.0);
  dm.distances(0, 1) = dm.distances(1, 0) = 1.0 / 3.0;
  EXPECT_EQ(distance_matrix_to_csv(dm), "release_id,a,b\na,0.000000,0.333333\nb,0.333333,0.000000\n");
  ClusterAssignment a;
  a.release_ids = {"a", "b"};
  a.labels = {1, 2};
  EXPECT_EQ(clusters_to_csv(a), "release_id,cluster\na,1\nb,2\n");
  const std::vector<StateSymbol> states{S("B"), S("BI"), S("Z")};
  EXPECT_EQ(join_states(states), "B-BI-Z");
}
