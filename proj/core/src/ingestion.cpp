#include "rtk/ingestion.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <json.hpp>
#include <optional>

#include "rtk/errors.hpp"

namespace rtk {
namespace {

using nlohmann::json;

constexpr std::string_view kPrepareRelease = "[maven-release-plugin] prepare release ";
constexpr std::string_view kNextIteration =
    "[maven-release-plugin] prepare for next development iteration";

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

std::string lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string{s.substr(first, last - first + 1)};
}

json parse_object_line(const std::string& line, std::size_t line_no) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::parse_error& e) {
    throw MalformedLine(line_no, std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) throw MalformedLine(line_no, "expected a JSON object");
  return obj;
}

const json& required(const json& obj, const char* field, std::size_t line_no) {
  const auto it = obj.find(field);
  if (it == obj.end() || it->is_null()) throw MissingField(field, line_no);
  return *it;
}

std::string required_string(const json& obj, const char* field, std::size_t line_no) {
  const json& v = required(obj, field, line_no);
  if (!v.is_string()) throw MalformedLine(line_no, std::string("field '") + field + "' must be a string");
  return v.get<std::string>();
}

std::optional<std::string> optional_string(const json& obj, const char* field,
                                           std::size_t line_no) {
  const auto it = obj.find(field);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw MalformedLine(line_no, std::string("field '") + field + "' must be a string or null");
  }
  return it->get<std::string>();
}

Timestamp timestamp_field(const std::string& text, const char* field, std::size_t line_no) {
  try {
    return parse_timestamp(text);
  } catch (const std::invalid_argument& e) {
    throw MalformedLine(line_no, std::string("field '") + field + "': " + e.what() + " ('" +
                                     text + "')");
  }
}

template <typename Fn>
void for_each_record(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    fn(parse_object_line(line, line_no), line_no);
  }
}

bool is_key_head(char c) { return c >= 'A' && c <= 'Z'; }
bool is_key_body(char c) { return is_key_head(c) || (c >= '0' && c <= '9'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_word(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<IssueRecord> parse_issues(std::istream& in) {
  std::vector<IssueRecord> issues;
  for_each_record(in, [&](const json& obj, std::size_t line_no) {
    IssueRecord rec;
    rec.id = required_string(obj, "id", line_no);
    if (rec.id.empty()) throw MalformedLine(line_no, "empty issue id");
    rec.type = IssueType::from_name(required_string(obj, "type", line_no));
    rec.created = timestamp_field(required_string(obj, "created", line_no), "created", line_no);
    if (auto resolved = optional_string(obj, "resolved", line_no)) {
      rec.resolved = timestamp_field(*resolved, "resolved", line_no);
      if (*rec.resolved < rec.created) {
        throw MalformedLine(line_no, "issue " + rec.id + " resolved before it was created");
      }
    }
    rec.resolution = optional_string(obj, "resolution", line_no).value_or("");
    rec.status = optional_string(obj, "status", line_no).value_or("");
    rec.parent_id = optional_string(obj, "parent", line_no);
    if (rec.parent_id && rec.type.kind() != IssueType::Kind::SubTask) {
      throw MalformedLine(line_no, "issue " + rec.id + " has a parent but is not a sub-task");
    }
    issues.push_back(std::move(rec));
  });
  return issues;
}

std::vector<CommitRecord> parse_commits(std::istream& in) {
  std::vector<CommitRecord> commits;
  for_each_record(in, [&](const json& obj, std::size_t line_no) {
    CommitRecord rec;
    rec.hash = required_string(obj, "hash", line_no);
    rec.timestamp =
        timestamp_field(required_string(obj, "timestamp", line_no), "timestamp", line_no);
    rec.message = required_string(obj, "message", line_no);
    commits.push_back(std::move(rec));
  });
  return commits;
}

ReleaseManifest parse_manifest(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidRelease(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("releases") || !doc["releases"].is_array()) {
    throw InvalidRelease("manifest must be an object with a 'releases' array");
  }
  std::vector<ReleaseWindow> windows;
  std::size_t index = 0;
  for (const json& entry : doc["releases"]) {
    ++index;
    const std::string where = "manifest entry " + std::to_string(index) + ": ";
    if (!entry.is_object()) throw InvalidRelease(where + "expected an object");
    for (const char* field : {"id", "inception", "ending"}) {
      if (!entry.contains(field) || !entry[field].is_string()) {
        throw InvalidRelease(where + "missing string field '" + field + "'");
      }
    }
    try {
      windows.push_back(ReleaseWindow{entry["id"].get<std::string>(),
                                      parse_timestamp(entry["inception"].get<std::string>()),
                                      parse_timestamp(entry["ending"].get<std::string>())});
    } catch (const std::invalid_argument& e) {
      throw InvalidRelease(where + e.what());
    }
  }
  return make_manifest(std::move(windows));
}

ReleaseManifest make_manifest(std::vector<ReleaseWindow> windows) {
  ReleaseManifest manifest;
  std::map<std::string, int> seen;
  for (const ReleaseWindow& w : windows) {
    w.validate();
    if (seen[w.release_id]++ > 0) throw InvalidRelease("duplicate release id '" + w.release_id + "'");
  }
  std::stable_sort(windows.begin(), windows.end(),
                   [](const ReleaseWindow& a, const ReleaseWindow& b) {
                     return a.inception < b.inception;
                   });
  for (std::size_t i = 0; i + 1 < windows.size(); ++i) {
    for (std::size_t j = i + 1; j < windows.size() && windows[j].inception < windows[i].ending;
         ++j) {
      manifest.warnings.push_back("releases '" + windows[i].release_id + "' and '" +
                                  windows[j].release_id + "' overlap");
    }
  }
  manifest.releases = std::move(windows);
  return manifest;
}

std::vector<IssueRecord> select_resolved_issues(std::span<const IssueRecord> issues,
                                                const ReleaseWindow& window,
                                                const SelectionConfig& config) {
  std::vector<IssueRecord> out;
  for (const IssueRecord& issue : issues) {
    if (!issue.resolved || !window.contains(*issue.resolved)) continue;
    if (issue.type.kind() == IssueType::Kind::SubTask) continue;
    const std::string resolution = lower(trim(issue.resolution));
    if (!config.accept.contains(resolution) || config.reject.contains(resolution)) continue;
    out.push_back(issue);
  }
  return out;
}

ReleaseManifest detect_release_windows(std::span<const CommitRecord> commits) {
  std::vector<ReleaseWindow> windows;
  std::vector<std::string> skipped;
  if (commits.empty()) throw NoReleaseTagsFound();

  // Inception of the release currently under development.
  std::optional<Timestamp> inception = commits.front().timestamp;
  bool saw_tag = false;
  for (const CommitRecord& c : commits) {
    if (c.message.find(kNextIteration) != std::string::npos) {
      inception = c.timestamp;
      continue;
    }
    const auto at = c.message.find(kPrepareRelease);
    if (at == std::string::npos) continue;
    saw_tag = true;
    const std::string rest = trim(std::string_view{c.message}.substr(at + kPrepareRelease.size()));
    const std::string id = rest.substr(0, rest.find_first_of(" \t\r\n"));
    if (id.empty()) {
      skipped.push_back("commit " + c.hash + ": release tag without an id");
    } else if (!inception || !(c.timestamp > *inception)) {
      skipped.push_back("release '" + id + "' at commit " + c.hash +
                        ": no development-iteration commit precedes it");
    } else {
      windows.push_back(ReleaseWindow{id, *inception, c.timestamp});
    }
    // The next window opens at the next "prepare for next development
    // iteration" commit; fall back to this release's ending.
    inception = c.timestamp;
  }
  if (!saw_tag) throw NoReleaseTagsFound();
  ReleaseManifest manifest = make_manifest(std::move(windows));
  manifest.warnings.insert(manifest.warnings.begin(), skipped.begin(), skipped.end());
  return manifest;
}

std::vector<std::string> find_issue_keys(std::string_view message) {
  std::vector<std::string> keys;
  std::size_t i = 0;
  const std::size_t n = message.size();
  while (i < n) {
    if (!is_key_head(message[i]) || (i > 0 && is_word(message[i - 1]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && is_key_body(message[j])) ++j;
    if (j + 1 < n && message[j] == '-' && is_digit(message[j + 1])) {
      std::size_t k = j + 1;
      while (k < n && is_digit(message[k])) ++k;
      if (k == n || !is_word(message[k])) {
        std::string key{message.substr(i, k - i)};
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(std::move(key));
      }
      i = k;
    } else {
      i = j;
    }
  }
  return keys;
}

std::vector<CommitRecord> tag_commits(std::vector<CommitRecord> commits) {
  for (CommitRecord& c : commits) c.tagged_issue_ids = find_issue_keys(c.message);
  return commits;
}

void sort_commits(std::vector<CommitRecord>& commits) {
  std::stable_sort(commits.begin(), commits.end(),
                   [](const CommitRecord& a, const CommitRecord& b) {
                     return a.timestamp < b.timestamp;
                   });
}

}  // namespace rtk
