#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <map>
#include <ostream>
#include <sstream>

#include "rtk/commit_trajectory.hpp"
#include "rtk/distance.hpp"
#include "rtk/seqstats.hpp"
#include "rtk/serialize.hpp"
#include "rtk/synthetic.hpp"
#include "svg.hpp"

namespace rtk::report {
namespace fs = std::filesystem;
namespace {

using ojson = nlohmann::ordered_json;

std::ifstream open_input(const std::string& stage, const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw StageError(stage, "cannot open '" + path.string() + "'");
  return in;
}

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw StageError("write", "cannot write '" + path.string() + "'");
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StageError("read", "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Runs a parser and rewraps its errors so the message names the stage and file.
template <typename Fn>
auto parse_stage(const std::string& stage, const fs::path& path, Fn&& parse) {
  auto in = open_input(stage, path);
  try {
    return parse(in);
  } catch (const Error& e) {
    throw StageError(stage, "'" + path.string() + "': " + e.what());
  }
}

double percentage(std::size_t part, std::size_t whole) {
  if (whole == 0) return 0.0;
  return std::round(10000.0 * static_cast<double>(part) / static_cast<double>(whole)) / 100.0;
}

fs::path trajectory_dir(const fs::path& out, Flavor flavor) {
  return out / "trajectories" / std::string(flavor_name(flavor));
}

ReleaseManifest load_build_manifest(const fs::path& out) {
  const fs::path path = out / "manifest.json";
  if (!fs::exists(path)) {
    throw StageError("analyze", "missing build output '" + path.string() + "'; run 'rtk build' first");
  }
  return parse_stage("analyze", path, [](std::istream& in) { return parse_manifest(in); });
}

// Trajectories of one flavor in manifest order; releases without a file are skipped.
std::vector<Trajectory> load_trajectories(const fs::path& out, const ReleaseManifest& manifest,
                                          Flavor flavor) {
  std::vector<Trajectory> out_list;
  const fs::path dir = trajectory_dir(out, flavor);
  for (const ReleaseWindow& w : manifest.releases) {
    const fs::path path = dir / (file_stem(w.release_id) + ".json");
    if (!fs::exists(path)) continue;
    try {
      out_list.push_back(trajectory_from_json(read_file(path)));
    } catch (const Error& e) {
      throw StageError("analyze", "'" + path.string() + "': " + e.what());
    }
  }
  return out_list;
}

std::vector<StateSymbol> normalized(const Trajectory& t, std::size_t positions) {
  return t.flavor == Flavor::IssuesBased ? normalize(t, positions)
                                         : normalize_commit_trajectory(t, positions);
}

struct Figures {
  std::string sequence_index;
  std::string dss_index;
  std::string transitions;
  std::string modal;
  std::string dss_frequency;
};

Figures render_figures(std::string_view flavor, const std::vector<Trajectory>& trajectories,
                       std::size_t positions) {
  std::vector<SequenceRow> rows;
  std::vector<SequenceRow> dss_rows;
  std::vector<DssSequence> dss;
  for (const Trajectory& t : trajectories) {
    rows.push_back(SequenceRow{t.release_id, normalized(t, positions)});
    dss.push_back(to_dss(t));
    dss_rows.push_back(SequenceRow{t.release_id, dss.back().states});
  }
  const std::string prefix = std::string(flavor) + "-based trajectories";
  Figures f;
  f.sequence_index = sequence_index_svg(prefix + " (normalized)", rows);
  f.dss_index = sequence_index_svg(prefix + " (DSS)", dss_rows);
  f.transitions = transition_heatmap_svg(prefix + ": transition rates between distinct states",
                                         transition_rates(std::span<const DssSequence>{dss}));
  f.modal = modal_svg(prefix + ": modal states (DSS)",
                      modal_trajectory(std::span<const DssSequence>{dss}));
  const auto table = dss_frequency(dss);
  f.dss_frequency = dss_frequency_svg(prefix + ": DSS cumulative frequency", table);
  return f;
}

void write_figures(const fs::path& dir, const Figures& f) {
  write_file(dir / "sequence_index.svg", f.sequence_index);
  write_file(dir / "sequence_index_dss.svg", f.dss_index);
  write_file(dir / "transition_matrix.svg", f.transitions);
  write_file(dir / "modal_dss.svg", f.modal);
  write_file(dir / "dss_frequency.svg", f.dss_frequency);
}

void analyze_flavor(const RunConfig& config, Flavor flavor,
                    const std::vector<Trajectory>& trajectories, std::ostream& log) {
  const std::string name{flavor_name(flavor)};
  const fs::path dir = config.out_dir / "analysis" / name;

  std::vector<DssSequence> dss;
  std::map<std::string, DssSequence> dss_by_id;
  std::vector<LabeledSequence> norm;
  for (const Trajectory& t : trajectories) {
    dss.push_back(to_dss(t));
    dss_by_id.emplace(t.release_id, dss.back());
    norm.push_back(LabeledSequence{t.release_id, normalized(t, config.positions)});
  }

  const TransitionMatrix tm = transition_rates(std::span<const DssSequence>{dss});
  write_file(dir / "transition_matrix.json", transition_matrix_to_json(tm));

  const ModalTrajectory modal_dss = modal_trajectory(std::span<const DssSequence>{dss});
  std::vector<std::vector<StateSymbol>> norm_states;
  for (const LabeledSequence& s : norm) norm_states.push_back(s.states);
  const ModalTrajectory modal_norm =
      modal_trajectory(std::span<const std::vector<StateSymbol>>{norm_states});
  write_file(dir / "modal_dss.json", modal_trajectory_to_json(modal_dss, "dss"));
  write_file(dir / "modal_normalized.json", modal_trajectory_to_json(modal_norm, "normalized"));

  const auto freq = dss_frequency(dss);
  write_file(dir / "dss_frequency.json", dss_frequency_to_json(freq));

  // Costs come from the DSS transition rates of the whole corpus, whichever
  // representation OM runs on.
  const SubstitutionCostMatrix scm = scm_from_rates(tm, config.indel);
  write_file(dir / "scm.json", scm_to_json(scm));

  std::vector<LabeledSequence> om_input;
  if (config.om_mode == OmMode::Normalized) {
    om_input = norm;
  } else {
    for (const DssSequence& d : dss) om_input.push_back(LabeledSequence{d.release_id, d.states});
  }
  const DistanceMatrix dm = distance_matrix(om_input, scm);
  write_file(dir / "distance_matrix.csv", distance_matrix_to_csv(dm));
  write_file(dir / "distance_matrix.json", distance_matrix_to_json(dm));

  std::size_t k = config.k;
  if (k > dm.size()) {
    log << "warning: " << name << ": only " << dm.size() << " releases, clustering with k="
        << dm.size() << " instead of " << k << "\n";
    k = dm.size();
  }
  const ClusterAssignment clusters = hierarchical_cluster(dm, k, config.linkage);
  write_file(dir / "clusters.csv", clusters_to_csv(clusters));
  const auto patterns = extract_patterns(clusters, dss_by_id, config.min_size);
  write_file(dir / "patterns.json", patterns_to_json(patterns, config.min_size, dm.size()));

  write_figures(dir, render_figures(name, trajectories, config.positions));
  std::vector<PatternGroup> groups;
  for (const PatternReport& p : patterns) {
    PatternGroup g;
    g.label = "Pattern" + std::to_string(p.rank) + " (cluster " + std::to_string(p.cluster) +
              ", " + std::to_string(p.members.size()) + " releases)";
    for (const std::string& id : p.members) g.rows.push_back(SequenceRow{id, dss_by_id.at(id).states});
    groups.push_back(std::move(g));
  }
  write_file(dir / "patterns.svg",
             pattern_groups_svg(name + "-based trajectories: patterns (DSS)", groups));

  log << name << ": " << trajectories.size() << " trajectories, " << clusters.cluster_count()
      << " clusters, " << patterns.size() << " patterns (min size " << config.min_size << ")\n";
}

}  // namespace

std::string file_stem(const std::string& release_id) {
  std::string out;
  for (char c : release_id) {
    const bool safe = std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '_';
    out.push_back(safe ? c : '_');
  }
  return out;
}

void validate(const RunConfig& config) {
  if (config.positions == 0) throw StageError("config", "normalized length must be positive");
  if (config.k == 0) throw StageError("config", "k must be positive");
  if (config.min_size == 0) throw StageError("config", "min-size must be positive");
  if (!(config.indel >= 0.0) || !std::isfinite(config.indel)) {
    throw StageError("config", "indel must be a non-negative number");
  }
}

ReleaseManifest cmd_detect_releases(const fs::path& commits, const fs::path& output,
                                    std::ostream& stdout_stream, std::ostream& log) {
  auto parsed = parse_stage("detect-releases: reading commits", commits,
                            [](std::istream& in) { return parse_commits(in); });
  sort_commits(parsed);
  ReleaseManifest manifest;
  try {
    manifest = detect_release_windows(parsed);
  } catch (const Error& e) {
    throw StageError("detect-releases", e.what());
  }
  for (const std::string& w : manifest.warnings) log << "warning: " << w << "\n";
  if (output.empty()) {
    stdout_stream << manifest_to_json(manifest);
  } else {
    write_file(output, manifest_to_json(manifest));
  }
  return manifest;
}

void cmd_build(const RunConfig& config, std::ostream& log) {
  validate(config);
  if (config.issues.empty()) throw StageError("build", "no issue export given (--issues)");

  const auto issues = parse_stage("build: reading issues", config.issues,
                                  [](std::istream& in) { return parse_issues(in); });
  std::vector<CommitRecord> commits;
  if (!config.commits.empty()) {
    commits = parse_stage("build: reading commits", config.commits,
                          [](std::istream& in) { return parse_commits(in); });
    sort_commits(commits);
    commits = tag_commits(std::move(commits));
  }

  ReleaseManifest manifest;
  if (!config.manifest.empty()) {
    manifest = parse_stage("build: reading manifest", config.manifest,
                           [](std::istream& in) { return parse_manifest(in); });
  } else if (!commits.empty()) {
    try {
      manifest = detect_release_windows(commits);
    } catch (const NoReleaseTagsFound& e) {
      throw StageError("build: detecting releases", e.what());
    }
  } else {
    throw StageError("build", "need a release manifest (--manifest) or a tagged commit log (--commits)");
  }

  std::vector<std::string> warnings = manifest.warnings;
  if (issues.empty()) warnings.push_back("issue export is empty; every trajectory is a single Z state");

  write_file(config.out_dir / "manifest.json", manifest_to_json(manifest));
  std::error_code ignored;
  fs::remove_all(config.out_dir / "trajectories", ignored);

  ojson releases = ojson::array();
  std::size_t total_issues = 0;
  std::size_t total_commits = 0;
  std::size_t total_tagged = 0;
  std::size_t total_tracked = 0;
  for (const ReleaseWindow& window : manifest.releases) {
    const auto selected = select_resolved_issues(issues, window, config.selection);
    const Trajectory traj = build_issue_trajectory(selected, window);
    write_file(trajectory_dir(config.out_dir, Flavor::IssuesBased) / (file_stem(window.release_id) + ".json"),
               trajectory_to_json(traj));

    std::map<std::string, std::size_t> by_type;
    for (const IssueRecord& i : selected) {
      ++by_type[i.type.state_letter() ? render_state(*i.type.state_letter()) : "?"];
    }

    ojson entry;
    entry["release_id"] = window.release_id;
    entry["inception"] = format_timestamp(window.inception);
    entry["ending"] = format_timestamp(window.ending);
    entry["issues_resolved"] = selected.size();
    entry["issues_by_type"] = by_type;
    entry["issues_dss"] = join_states(to_dss(traj).states);
    entry["issues_transitions"] = transition_count(traj);

    if (!commits.empty()) {
      const CommitActivity activity = commit_activity(commits, selected, window);
      entry["commits"] = activity.in_window;
      entry["commits_tagged"] = activity.tagged;
      entry["commits_kept"] = activity.kept;
      entry["commits_tangled"] = activity.tangled;
      entry["pct_commits_tagged_by_issues"] = percentage(activity.tagged, activity.in_window);
      entry["issues_tracked_in_commits"] = activity.issues_tracked;
      entry["pct_issues_tracked_in_commits"] = percentage(activity.issues_tracked, selected.size());
      total_commits += activity.in_window;
      total_tagged += activity.tagged;
      total_tracked += activity.issues_tracked;
      try {
        const Trajectory ctraj = build_commit_trajectory(commits, selected, window);
        write_file(trajectory_dir(config.out_dir, Flavor::CommitsBased) /
                       (file_stem(window.release_id) + ".json"),
                   trajectory_to_json(ctraj));
        entry["commits_dss"] = join_states(to_dss(ctraj).states);
        entry["commits_transitions"] = transition_count(ctraj);
      } catch (const NoTaggedCommits& e) {
        warnings.push_back(e.what());
        entry["commits_dss"] = nullptr;
      }
    }
    total_issues += selected.size();
    releases.push_back(std::move(entry));
  }

  ojson summary;
  summary["releases"] = std::move(releases);
  ojson totals;
  totals["releases"] = manifest.releases.size();
  totals["issues_resolved"] = total_issues;
  if (!commits.empty()) {
    totals["commits"] = total_commits;
    totals["commits_tagged"] = total_tagged;
    totals["pct_commits_tagged_by_issues"] = percentage(total_tagged, total_commits);
    totals["issues_tracked_in_commits"] = total_tracked;
    totals["pct_issues_tracked_in_commits"] = percentage(total_tracked, total_issues);
  }
  summary["totals"] = std::move(totals);
  summary["warnings"] = warnings;
  write_file(config.out_dir / "build_summary.json", summary.dump(2) + "\n");

  for (const std::string& w : warnings) log << "warning: " << w << "\n";
  log << "built " << manifest.releases.size() << " release trajectories into '"
      << config.out_dir.string() << "'\n";
}

void cmd_analyze(const RunConfig& config, std::ostream& log) {
  validate(config);
  const ReleaseManifest manifest = load_build_manifest(config.out_dir);
  bool any = false;
  for (Flavor flavor : {Flavor::IssuesBased, Flavor::CommitsBased}) {
    const auto trajectories = load_trajectories(config.out_dir, manifest, flavor);
    if (trajectories.empty()) continue;
    any = true;
    try {
      analyze_flavor(config, flavor, trajectories, log);
    } catch (const StageError&) {
      throw;
    } catch (const Error& e) {
      throw StageError("analyze: " + std::string(flavor_name(flavor)), e.what());
    }
  }
  if (!any) {
    throw StageError("analyze", "no trajectories under '" + (config.out_dir / "trajectories").string() +
                                    "'; run 'rtk build' first");
  }
}

void cmd_render(const RunConfig& config, std::ostream& log) {
  validate(config);
  const ReleaseManifest manifest = load_build_manifest(config.out_dir);
  bool any = false;
  for (Flavor flavor : {Flavor::IssuesBased, Flavor::CommitsBased}) {
    const auto trajectories = load_trajectories(config.out_dir, manifest, flavor);
    if (trajectories.empty()) continue;
    any = true;
    const std::string name{flavor_name(flavor)};
    write_figures(config.out_dir / "analysis" / name,
                  render_figures(name, trajectories, config.positions));
    log << name << ": rendered " << trajectories.size() << " trajectories\n";
  }
  if (!any) throw StageError("render", "no trajectories found; run 'rtk build' first");
}

void cmd_synth(const fs::path& out_dir, std::uint64_t seed, std::ostream& log) {
  SyntheticOptions options;
  options.seed = seed;
  const SyntheticCorpus corpus = generate_corpus(options);
  write_file(out_dir / "issues.jsonl", issues_to_jsonl(corpus.issues));
  write_file(out_dir / "commits.jsonl", commits_to_jsonl(corpus.commits));
  write_file(out_dir / "manifest.json", manifest_to_json(corpus.manifest));
  std::string families = "release_id,family\n";
  for (std::size_t r = 0; r < corpus.manifest.releases.size(); ++r) {
    families += corpus.manifest.releases[r].release_id + "," +
                planted_families()[corpus.family_of_release[r]].name + "\n";
  }
  write_file(out_dir / "families.csv", families);
  log << "wrote " << corpus.manifest.releases.size() << " synthetic releases, "
      << corpus.issues.size() << " issues and " << corpus.commits.size() << " commits to '"
      << out_dir.string() << "'\n";
}

}  // namespace rtk::report
