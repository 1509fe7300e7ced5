#include "rtk/trajectory.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace rtk {
namespace {

// Keeps (2 * positions) * span inside int64.
constexpr std::size_t kMaxPositions = 1'000'000;
constexpr std::int64_t kMaxSpan = 1'000'000'000'000;

struct Interval {
  Timestamp open;
  Timestamp close;
  const std::string* id;
};

std::vector<AtomicState> merge_intervals(StateSymbol type, std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
    if (a.open != b.open) return a.open < b.open;
    return a.close < b.close;
  });
  std::vector<AtomicState> states;
  for (const Interval& iv : intervals) {
    if (!states.empty() && iv.open <= states.back().close_t) {
      AtomicState& current = states.back();
      current.close_t = std::max(current.close_t, iv.close);
      current.member_issue_ids.push_back(*iv.id);
    } else {
      states.push_back(AtomicState{type, iv.open, iv.close, {*iv.id}});
    }
  }
  std::erase_if(states, [](const AtomicState& s) { return !(s.close_t > s.open_t); });
  return states;
}

}  // namespace

AtomicStateMap build_atomic_states(std::span<const IssueRecord> issues,
                                   const ReleaseWindow& window) {
  std::map<StateSymbol, std::vector<Interval>> by_type;
  for (const IssueRecord& issue : issues) {
    const auto letter = issue.type.state_letter();
    if (!letter || !issue.resolved) continue;
    const Timestamp open = std::max(issue.created, window.inception);
    const Timestamp close = std::min(*issue.resolved, window.ending);
    if (close < open) continue;
    by_type[*letter].push_back(Interval{open, close, &issue.id});
  }
  AtomicStateMap atomics;
  for (auto& [type, intervals] : by_type) {
    auto merged = merge_intervals(type, std::move(intervals));
    if (!merged.empty()) atomics.emplace(type, std::move(merged));
  }
  return atomics;
}

Trajectory build_trajectory(const AtomicStateMap& atomics, const ReleaseWindow& window) {
  window.validate();
  const std::int64_t begin = to_seconds(window.inception);
  const std::int64_t end = to_seconds(window.ending);

  std::vector<std::int64_t> cuts{begin, end};
  for (const auto& [type, states] : atomics) {
    for (const AtomicState& s : states) {
      cuts.push_back(std::clamp(to_seconds(s.open_t), begin, end));
      cuts.push_back(std::clamp(to_seconds(s.close_t), begin, end));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // One cursor per atomic list; elementary intervals are visited in order so
  // each cursor only moves forward.
  struct Cursor {
    StateSymbol type;
    const std::vector<AtomicState>* states;
    std::size_t next = 0;
  };
  std::vector<Cursor> cursors;
  for (const auto& [type, states] : atomics) cursors.push_back(Cursor{type, &states});

  Trajectory traj;
  traj.release_id = window.release_id;
  traj.flavor = Flavor::IssuesBased;
  traj.window = window;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const std::int64_t lo = cuts[k];
    const std::int64_t hi = cuts[k + 1];
    StateSymbol state = StateSymbol::zen();
    for (Cursor& c : cursors) {
      while (c.next < c.states->size() && to_seconds((*c.states)[c.next].close_t) <= lo) ++c.next;
      if (c.next < c.states->size() && to_seconds((*c.states)[c.next].open_t) <= lo) {
        state = state_union(state, c.type);
      }
    }
    if (!traj.segments.empty() && traj.segments.back().state == state) {
      traj.segments.back().end = hi;
    } else {
      traj.segments.push_back(Segment{state, lo, hi});
    }
  }
  return traj;
}

Trajectory build_issue_trajectory(std::span<const IssueRecord> issues,
                                  const ReleaseWindow& window) {
  return build_trajectory(build_atomic_states(issues, window), window);
}

std::vector<StateSymbol> sample_midpoints(std::span<const Segment> segments, std::int64_t origin,
                                          std::int64_t span, std::size_t positions) {
  if (positions == 0) throw std::invalid_argument("normalized length must be positive");
  if (span <= 0 || segments.empty()) throw std::invalid_argument("cannot normalize an empty trajectory");
  // Exact comparison in units of 1/(2*positions): the k-th sample sits at
  // (2k+1) * span, a segment [s, e) at 2*positions*(s - origin) .. 2*positions*(e - origin).
  if (positions > kMaxPositions || span > kMaxSpan) {
    throw std::invalid_argument("normalization range too large");
  }
  const auto scale = 2 * static_cast<std::int64_t>(positions);
  std::vector<StateSymbol> out;
  out.reserve(positions);
  std::size_t seg = 0;
  for (std::size_t k = 0; k < positions; ++k) {
    const std::int64_t at = static_cast<std::int64_t>(2 * k + 1) * span;
    while (seg + 1 < segments.size() && scale * (segments[seg].end - origin) <= at) {
      ++seg;
    }
    out.push_back(segments[seg].state);
  }
  return out;
}

std::vector<StateSymbol> normalize(const Trajectory& t, std::size_t positions) {
  if (t.flavor != Flavor::IssuesBased) {
    throw std::invalid_argument("normalize expects an issues-based trajectory");
  }
  return sample_midpoints(t.segments, t.origin(), t.duration(), positions);
}

DssSequence to_dss(const Trajectory& t) {
  DssSequence dss;
  dss.release_id = t.release_id;
  dss.states.reserve(t.segments.size());
  for (const Segment& s : t.segments) {
    if (dss.states.empty() || dss.states.back() != s.state) dss.states.push_back(s.state);
  }
  return dss;
}

}  // namespace rtk
