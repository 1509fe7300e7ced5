#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rtk/model.hpp"

namespace rtk {

/// A maximal period during which at least one issue of a single type
/// (B, I, F, T or pooled X) is open.
struct AtomicState {
  StateSymbol type;
  Timestamp open_t;
  Timestamp close_t;
  std::vector<std::string> member_issue_ids;
};

/// Atomic states per atomic symbol, each list sorted by open_t.
using AtomicStateMap = std::map<StateSymbol, std::vector<AtomicState>>;

inline constexpr std::size_t kDefaultPositions = 100;

/// Groups each type's issue lifecycles [max(created, inception), resolved]
/// into atomic states. Touching intervals merge. Intervals are clipped to the
/// window; groups that collapse to zero length are dropped. Sub-tasks are ignored.
AtomicStateMap build_atomic_states(std::span<const IssueRecord> issues,
                                   const ReleaseWindow& window);

/// Sweeps all atomic transitions into global states over [inception, ending].
/// Letter states unite; X only shows where no letter state is open; Z where
/// nothing is open. Equal neighbours are merged.
Trajectory build_trajectory(const AtomicStateMap& atomics, const ReleaseWindow& window);

/// build_atomic_states followed by build_trajectory.
Trajectory build_issue_trajectory(std::span<const IssueRecord> issues,
                                  const ReleaseWindow& window);

/// Resamples an issues-based trajectory at `positions` midpoints
/// origin + (k + 0.5) / positions * duration.
std::vector<StateSymbol> normalize(const Trajectory& t, std::size_t positions = kDefaultPositions);

/// Midpoint sampling of any contiguous segment list covering [origin, origin + span).
std::vector<StateSymbol> sample_midpoints(std::span<const Segment> segments, std::int64_t origin,
                                          std::int64_t span, std::size_t positions);

DssSequence to_dss(const Trajectory& t);

inline std::size_t transition_count(const Trajectory& t) {
  return t.segments.empty() ? 0 : t.segments.size() - 1;
}

}  // namespace rtk
