#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rtk/state.hpp"
#include "rtk/time.hpp"

namespace rtk {

class IssueType {
 public:
  enum class Kind { Bug, Improvement, NewFeature, Task, SubTask, Other };

  explicit IssueType(Kind kind);

  /// Maps a tracker type name ("Bug", "New Feature", "Sub-task", ...)
  /// case-insensitively; anything unrecognised becomes Other(name).
  static IssueType from_name(std::string_view name);
  static IssueType other(std::string name);

  Kind kind() const { return kind_; }
  /// Type name as it appeared in the export (or the canonical name).
  const std::string& name() const { return name_; }

  /// Bug, Improvement, NewFeature and Task are the recurrent kinds.
  bool is_recurrent() const;

  /// B/I/F/T for recurrent kinds, X for Other, nothing for SubTask.
  std::optional<StateSymbol> state_letter() const;

  friend bool operator==(const IssueType&, const IssueType&) = default;

 private:
  IssueType(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  Kind kind_;
  std::string name_;
};

struct IssueRecord {
  std::string id;
  IssueType type{IssueType::Kind::Other};
  Timestamp created;
  std::optional<Timestamp> resolved;
  std::string resolution;
  std::string status;
  std::optional<std::string> parent_id;
};

/// One development iteration; ending > inception.
struct ReleaseWindow {
  std::string release_id;
  Timestamp inception;
  Timestamp ending;

  /// Throws InvalidRelease unless ending > inception and the id is non-empty.
  void validate() const;
  bool contains(Timestamp t) const { return inception <= t && t <= ending; }

  friend bool operator==(const ReleaseWindow&, const ReleaseWindow&) = default;
};

enum class Flavor { IssuesBased, CommitsBased };

std::string_view flavor_name(Flavor f);
std::optional<Flavor> parse_flavor(std::string_view text);

/// Half-open span [start, end) of one state. Units are epoch seconds for
/// issues-based trajectories and commit indices for commits-based ones.
struct Segment {
  StateSymbol state;
  std::int64_t start = 0;
  std::int64_t end = 0;

  std::int64_t length() const { return end - start; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct Trajectory {
  std::string release_id;
  Flavor flavor = Flavor::IssuesBased;
  ReleaseWindow window;
  std::vector<Segment> segments;

  /// Time origin and extent of the trajectory in segment units.
  std::int64_t origin() const;
  std::int64_t span_end() const;
  std::int64_t duration() const { return span_end() - origin(); }

  /// Checks contiguity, maximal runs and window coverage; throws Error.
  void validate() const;
};

struct DssSequence {
  std::string release_id;
  std::vector<StateSymbol> states;

  friend bool operator==(const DssSequence&, const DssSequence&) = default;
};

}  // namespace rtk
