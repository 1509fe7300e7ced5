// rtk: release trajectory toolkit command line.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "report/commands.hpp"
#include "rtk/time.hpp"

namespace {

using rtk::report::RunConfig;

// Everything printed to the user also lands in <out>/run.log with a run stamp.
class TeeLog : public std::streambuf {
 public:
  TeeLog(std::streambuf* a, std::streambuf* b) : a_(a), b_(b) {}

 protected:
  int overflow(int c) override {
    if (c == EOF) return !EOF;
    const int ra = a_->sputc(static_cast<char>(c));
    const int rb = b_ ? b_->sputc(static_cast<char>(c)) : c;
    return (ra == EOF || rb == EOF) ? EOF : c;
  }
  int sync() override { return (a_->pubsync() == 0 && (!b_ || b_->pubsync() == 0)) ? 0 : -1; }

 private:
  std::streambuf* a_;
  std::streambuf* b_;
};

std::set<std::string> lowered(const std::vector<std::string>& values) {
  std::set<std::string> out;
  for (std::string v : values) {
    for (char& c : v) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    out.insert(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconstruct, summarize and cluster software release trajectories"};
  app.set_config("--config", "", "TOML configuration file (keys match long option names)");
  app.require_subcommand(1);

  RunConfig config;
  std::string issues;
  std::string commits;
  std::string manifest;
  std::string out_dir = config.out_dir.string();
  std::vector<std::string> accept(config.selection.accept.begin(), config.selection.accept.end());
  std::vector<std::string> reject(config.selection.reject.begin(), config.selection.reject.end());
  std::string om_mode = "normalized";
  std::string linkage = "ward";
  std::string output;
  std::uint64_t seed = 20150101;

  app.add_option("--issues", issues, "Issue export (JSON Lines)")->envname("RTK_ISSUES");
  app.add_option("--commits", commits, "Commit log (JSON Lines)")->envname("RTK_COMMITS");
  app.add_option("--manifest", manifest, "Release manifest (JSON)")->envname("RTK_MANIFEST");
  app.add_option("--out", out_dir, "Output directory")->envname("RTK_OUT")->capture_default_str();
  app.add_option("--accept", accept, "Resolutions counted as resolved")->envname("RTK_ACCEPT")->delimiter(',');
  app.add_option("--reject", reject, "Resolutions never counted as resolved")->envname("RTK_REJECT")->delimiter(',');
  app.add_option("--positions", config.positions, "Normalized trajectory length")
      ->envname("RTK_POSITIONS")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--indel", config.indel, "Optimal Matching insertion/deletion cost")
      ->envname("RTK_INDEL")->capture_default_str()->check(CLI::NonNegativeNumber);
  app.add_option("--k", config.k, "Number of clusters")
      ->envname("RTK_K")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--min-size", config.min_size, "Smallest cluster reported as a pattern")
      ->envname("RTK_MIN_SIZE")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--om-mode", om_mode, "Sequences compared by OM")
      ->envname("RTK_OM_MODE")->capture_default_str()->check(CLI::IsMember({"normalized", "dss"}));
  app.add_option("--linkage", linkage, "Agglomeration linkage")
      ->envname("RTK_LINKAGE")->capture_default_str()
      ->check(CLI::IsMember({"ward", "single", "complete", "average"}));

  auto* detect = app.add_subcommand("detect-releases", "Derive release windows from maven-release-plugin commits")->fallthrough();
  detect->add_option("-o,--output", output, "Manifest file to write (stdout if omitted)");
  auto* build = app.add_subcommand("build", "Build issues- and commits-based trajectories")->fallthrough();
  auto* analyze = app.add_subcommand("analyze", "Statistics, distances, clusters, patterns and figures")->fallthrough();
  auto* render = app.add_subcommand("render", "Re-render SVG figures from built trajectories")->fallthrough();
  auto* synth = app.add_subcommand("synth", "Write a synthetic corpus with planted trajectory families")->fallthrough();
  synth->add_option("--seed", seed, "Generator seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  config.issues = issues;
  config.commits = commits;
  config.manifest = manifest;
  config.out_dir = out_dir;
  config.selection.accept = lowered(accept);
  config.selection.reject = lowered(reject);
  config.om_mode = om_mode == "dss" ? rtk::report::OmMode::Dss : rtk::report::OmMode::Normalized;
  config.linkage = *rtk::parse_linkage(linkage);

  std::ofstream run_log;
  if (!detect->parsed() && !synth->parsed()) {
    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    run_log.open(config.out_dir / "run.log", std::ios::app);
    const auto now = std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
    run_log << "# " << rtk::format_timestamp(now) << " rtk";
    for (int i = 1; i < argc; ++i) run_log << ' ' << argv[i];
    run_log << "\n";
  }
  TeeLog tee(std::cerr.rdbuf(), run_log.is_open() ? run_log.rdbuf() : nullptr);
  std::ostream log(&tee);

  try {
    if (detect->parsed()) {
      if (commits.empty()) throw rtk::report::StageError("detect-releases", "--commits is required");
      rtk::report::cmd_detect_releases(commits, output, std::cout, log);
    } else if (build->parsed()) {
      rtk::report::cmd_build(config, log);
    } else if (analyze->parsed()) {
      rtk::report::cmd_analyze(config, log);
    } else if (render->parsed()) {
      rtk::report::cmd_render(config, log);
    } else if (synth->parsed()) {
      rtk::report::cmd_synth(config.out_dir, seed, log);
    }
  } catch (const std::exception& e) {
    log << "error: " << e.what() << std::endl;
    return 1;
  }
  log.flush();
  return 0;
}
