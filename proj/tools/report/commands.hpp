#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "rtk/clustering.hpp"
#include "rtk/errors.hpp"
#include "rtk/ingestion.hpp"
#include "rtk/trajectory.hpp"

namespace rtk::report {

enum class OmMode { Normalized, Dss };

struct RunConfig {
  std::filesystem::path issues;
  std::filesystem::path commits;
  std::filesystem::path manifest;
  std::filesystem::path out_dir = "rtk-out";
  SelectionConfig selection;
  std::size_t positions = kDefaultPositions;
  double indel = 1.0;
  std::size_t k = 6;
  std::size_t min_size = kDefaultMinPatternSize;
  OmMode om_mode = OmMode::Normalized;
  Linkage linkage = Linkage::Ward;
};

/// Failure of one pipeline stage; the message names the stage and the input.
class StageError : public Error {
 public:
  StageError(const std::string& stage, const std::string& detail)
      : Error(stage + ": " + detail), stage_(stage) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

/// Throws StageError unless counts are positive and indel is finite and non-negative.
void validate(const RunConfig& config);

/// Reads a commit log and writes the detected manifest to `output`, or to
/// `stdout_stream` when no path is given. Warnings go to `log`.
ReleaseManifest cmd_detect_releases(const std::filesystem::path& commits,
                                    const std::filesystem::path& output,
                                    std::ostream& stdout_stream, std::ostream& log);

/// Writes <out>/manifest.json, <out>/trajectories/{issues,commits}/<release>.json
/// and <out>/build_summary.json.
void cmd_build(const RunConfig& config, std::ostream& log);

/// Reads build outputs and writes statistics, distances, clusters, patterns
/// and SVG renderings under <out>/analysis/<flavor>/.
void cmd_analyze(const RunConfig& config, std::ostream& log);

/// Re-renders only the SVG figures from the build outputs.
void cmd_render(const RunConfig& config, std::ostream& log);

/// Writes issues.jsonl, commits.jsonl, manifest.json and families.csv.
void cmd_synth(const std::filesystem::path& out_dir, std::uint64_t seed, std::ostream& log);

/// File-system safe rendering of a release id.
std::string file_stem(const std::string& release_id);

}  // namespace rtk::report
