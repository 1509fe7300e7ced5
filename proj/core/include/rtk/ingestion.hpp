#pragma once

#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rtk/model.hpp"

namespace rtk {

struct CommitRecord {
  std::string hash;
  Timestamp timestamp;
  std::string message;
  /// Tracker keys mentioned in the message, in order, de-duplicated. Filled by tag_commits.
  std::vector<std::string> tagged_issue_ids;
};

/// Release windows sorted by inception, ids unique. Overlaps are allowed
/// (branch releases) and reported in `warnings`.
struct ReleaseManifest {
  std::vector<ReleaseWindow> releases;
  std::vector<std::string> warnings;
};

/// Resolution values (compared lower-cased) that make an issue count as resolved.
struct SelectionConfig {
  std::set<std::string> accept{"fixed", "implemented", "done", "resolved", "complete"};
  std::set<std::string> reject{"invalid",   "not a problem",    "won't fix",  "wontfix",
                               "duplicate", "cannot reproduce", "incomplete", "not complete"};
};

// Issue Export: JSON Lines with id, type, created, resolved, resolution, status, parent.
// Blank lines are skipped but still counted for line numbers.
std::vector<IssueRecord> parse_issues(std::istream& in);

// Commit Log: JSON Lines with hash, timestamp, message. tagged_issue_ids is left empty.
std::vector<CommitRecord> parse_commits(std::istream& in);

/// {"releases":[{"id":...,"inception":...,"ending":...}]}
ReleaseManifest parse_manifest(std::istream& in);

/// Sorts by inception, rejects duplicate ids and invalid windows, records overlaps.
ReleaseManifest make_manifest(std::vector<ReleaseWindow> windows);

/// Issues resolved inside the window with an accepted resolution, sub-tasks excluded.
std::vector<IssueRecord> select_resolved_issues(std::span<const IssueRecord> issues,
                                                const ReleaseWindow& window,
                                                const SelectionConfig& config = {});

/// Derives release windows from maven-release-plugin commits. Expects commits
/// sorted by timestamp. Throws NoReleaseTagsFound.
ReleaseManifest detect_release_windows(std::span<const CommitRecord> commits);

/// Tracker keys such as "SOLR-6906" in order of appearance, without repeats.
std::vector<std::string> find_issue_keys(std::string_view message);

std::vector<CommitRecord> tag_commits(std::vector<CommitRecord> commits);

/// Sorts commits by timestamp; ties keep input order.
void sort_commits(std::vector<CommitRecord>& commits);

}  // namespace rtk
