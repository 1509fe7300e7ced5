#include "rtk/commit_trajectory.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "rtk/errors.hpp"
#include "rtk/trajectory.hpp"

namespace rtk {
namespace {

std::unordered_map<std::string, StateSymbol> letters_by_id(std::span<const IssueRecord> issues) {
  std::unordered_map<std::string, StateSymbol> out;
  for (const IssueRecord& issue : issues) {
    if (auto letter = issue.type.state_letter()) out.emplace(issue.id, *letter);
  }
  return out;
}

}  // namespace

Trajectory build_commit_trajectory(std::span<const CommitRecord> commits,
                                   std::span<const IssueRecord> issues,
                                   const ReleaseWindow& window) {
  const auto letters = letters_by_id(issues);
  Trajectory traj;
  traj.release_id = window.release_id;
  traj.flavor = Flavor::CommitsBased;
  traj.window = window;

  std::int64_t index = 0;
  for (const CommitRecord& c : commits) {
    if (!window.contains(c.timestamp) || c.tagged_issue_ids.empty()) continue;
    const auto it = letters.find(c.tagged_issue_ids.front());
    if (it == letters.end()) continue;
    if (!traj.segments.empty() && traj.segments.back().state == it->second) {
      traj.segments.back().end = index + 1;
    } else {
      traj.segments.push_back(Segment{it->second, index, index + 1});
    }
    ++index;
  }
  if (traj.segments.empty()) throw NoTaggedCommits(window.release_id);
  return traj;
}

std::vector<StateSymbol> normalize_commit_trajectory(const Trajectory& t, std::size_t positions) {
  if (t.flavor != Flavor::CommitsBased) {
    throw std::invalid_argument("normalize_commit_trajectory expects a commits-based trajectory");
  }
  return sample_midpoints(t.segments, t.origin(), t.duration(), positions);
}

CommitActivity commit_activity(std::span<const CommitRecord> commits,
                               std::span<const IssueRecord> issues, const ReleaseWindow& window) {
  const auto letters = letters_by_id(issues);
  CommitActivity stats;
  std::set<std::string> referenced;
  for (const CommitRecord& c : commits) {
    if (!window.contains(c.timestamp)) continue;
    ++stats.in_window;
    if (c.tagged_issue_ids.empty()) continue;
    ++stats.tagged;
    for (const std::string& id : c.tagged_issue_ids) {
      if (letters.contains(id)) referenced.insert(id);
    }
    const auto first = letters.find(c.tagged_issue_ids.front());
    if (first == letters.end()) continue;
    ++stats.kept;
    for (const std::string& id : c.tagged_issue_ids) {
      const auto it = letters.find(id);
      if (it != letters.end() && it->second != first->second) {
        ++stats.tangled;
        break;
      }
    }
  }
  stats.issues_tracked = referenced.size();
  return stats;
}

}  // namespace rtk
