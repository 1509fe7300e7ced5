#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rtk/ingestion.hpp"
#include "rtk/model.hpp"

namespace rtk {

/// Commits-based ("activity") trajectory: every in-window commit whose first
/// tagged key is one of the release's selected issues is annotated with that
/// issue's type letter, and runs of equal letters become segments measured in
/// commits. Throws NoTaggedCommits when no commit qualifies.
Trajectory build_commit_trajectory(std::span<const CommitRecord> commits,
                                   std::span<const IssueRecord> issues,
                                   const ReleaseWindow& window);

std::vector<StateSymbol> normalize_commit_trajectory(const Trajectory& t, std::size_t positions);

/// Tagging statistics for one release, in the spirit of a per-project data table.
struct CommitActivity {
  std::size_t in_window = 0;      ///< commits with timestamp inside the window
  std::size_t tagged = 0;         ///< of those, commits mentioning any tracker key
  std::size_t kept = 0;           ///< commits that made it into the trajectory
  std::size_t tangled = 0;        ///< kept commits whose keys map to more than one type
  std::size_t issues_tracked = 0; ///< selected issues referenced by at least one in-window commit
};

CommitActivity commit_activity(std::span<const CommitRecord> commits,
                               std::span<const IssueRecord> issues, const ReleaseWindow& window);

}  // namespace rtk
