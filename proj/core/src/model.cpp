#include "rtk/model.hpp"

#include <algorithm>
#include <cctype>

#include "rtk/errors.hpp"

namespace rtk {
namespace {

std::string fold(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

std::string_view canonical_name(IssueType::Kind kind) {
  switch (kind) {
    case IssueType::Kind::Bug: return "Bug";
    case IssueType::Kind::Improvement: return "Improvement";
    case IssueType::Kind::NewFeature: return "New Feature";
    case IssueType::Kind::Task: return "Task";
    case IssueType::Kind::SubTask: return "Sub-task";
    case IssueType::Kind::Other: return "Other";
  }
  return "Other";
}

}  // namespace

IssueType::IssueType(Kind kind) : kind_(kind), name_(canonical_name(kind)) {}

IssueType IssueType::other(std::string name) { return IssueType{Kind::Other, std::move(name)}; }

IssueType IssueType::from_name(std::string_view name) {
  const std::string key = fold(name);
  std::string original{name};
  if (key == "bug") return IssueType{Kind::Bug, original};
  if (key == "improvement") return IssueType{Kind::Improvement, original};
  if (key == "newfeature" || key == "feature") return IssueType{Kind::NewFeature, original};
  if (key == "task") return IssueType{Kind::Task, original};
  if (key == "subtask" || key == "technicalsubtask") return IssueType{Kind::SubTask, original};
  return other(std::move(original));
}

bool IssueType::is_recurrent() const {
  return kind_ == Kind::Bug || kind_ == Kind::Improvement || kind_ == Kind::NewFeature ||
         kind_ == Kind::Task;
}

std::optional<StateSymbol> IssueType::state_letter() const {
  switch (kind_) {
    case Kind::Bug: return StateSymbol::of(Letter::B);
    case Kind::Improvement: return StateSymbol::of(Letter::I);
    case Kind::NewFeature: return StateSymbol::of(Letter::F);
    case Kind::Task: return StateSymbol::of(Letter::T);
    case Kind::Other: return StateSymbol::other();
    case Kind::SubTask: return std::nullopt;
  }
  return std::nullopt;
}

void ReleaseWindow::validate() const {
  if (release_id.empty()) throw InvalidRelease("release with empty id");
  if (!(ending > inception)) {
    throw InvalidRelease("release '" + release_id + "': ending " + format_timestamp(ending) +
                         " is not after inception " + format_timestamp(inception));
  }
}

std::string_view flavor_name(Flavor f) {
  return f == Flavor::IssuesBased ? "issues" : "commits";
}

std::optional<Flavor> parse_flavor(std::string_view text) {
  if (text == "issues") return Flavor::IssuesBased;
  if (text == "commits") return Flavor::CommitsBased;
  return std::nullopt;
}

std::int64_t Trajectory::origin() const {
  if (flavor == Flavor::IssuesBased) return to_seconds(window.inception);
  return 0;
}

std::int64_t Trajectory::span_end() const {
  if (flavor == Flavor::IssuesBased) return to_seconds(window.ending);
  return segments.empty() ? 0 : segments.back().end;
}

void Trajectory::validate() const {
  const std::string where = "trajectory '" + release_id + "': ";
  if (segments.empty()) throw Error(where + "no segments");
  for (std::size_t k = 0; k < segments.size(); ++k) {
    const Segment& s = segments[k];
    if (s.end <= s.start) throw Error(where + "empty segment");
    if (k > 0) {
      if (segments[k - 1].end != s.start) throw Error(where + "segments are not contiguous");
      if (segments[k - 1].state == s.state) throw Error(where + "adjacent segments share a state");
    }
    if (flavor == Flavor::CommitsBased && s.state.complexity() != 1) {
      throw Error(where + "commits-based segment with non-atomic state");
    }
  }
  if (segments.front().start != origin() || segments.back().end != span_end()) {
    throw Error(where + "segments do not span the release window");
  }
}

}  // namespace rtk
