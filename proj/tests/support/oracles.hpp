#pragma once

// Reference routines used only by tests. Each one recomputes a quantity the
// slow, obvious way so it can be compared with the library's implementation.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rtk/distance.hpp"
#include "rtk/model.hpp"

namespace rtk::oracle {

/// Letters whose issues cover instant t (closed lifecycles, clipped at inception).
inline std::set<StateSymbol> covering_types(const std::vector<IssueRecord>& issues,
                                            const ReleaseWindow& window, Timestamp t) {
  std::set<StateSymbol> out;
  for (const IssueRecord& i : issues) {
    const auto letter = i.type.state_letter();
    if (!letter || !i.resolved) continue;
    const Timestamp open = std::max(i.created, window.inception);
    const Timestamp close = std::min(*i.resolved, window.ending);
    if (open <= t && t <= close && open < close) out.insert(*letter);
  }
  return out;
}

/// Global state implied by a set of open atomic types.
inline StateSymbol global_state(const std::set<StateSymbol>& types) {
  unsigned mask = 0;
  bool other = false;
  for (StateSymbol s : types) {
    if (s.is_other()) other = true;
    else mask |= s.letters();
  }
  if (mask != 0) return StateSymbol::from_mask(mask);
  return other ? StateSymbol::other() : StateSymbol::zen();
}

/// State of the segment holding t, by linear scan over half-open segments.
inline StateSymbol state_at(const std::vector<Segment>& segments, std::int64_t t) {
  for (const Segment& s : segments) {
    if (s.start <= t && t < s.end) return s.state;
  }
  return segments.back().state;
}

/// Brute-force midpoint sampler: for each k, scans every segment and tests
/// 2P(s - origin) <= (2k+1) D < 2P(e - origin) exactly.
inline std::vector<std::size_t> segment_of_position(const std::vector<Segment>& segments,
                                                    std::int64_t origin, std::int64_t span,
                                                    std::size_t positions) {
  std::vector<std::size_t> out;
  const auto two_p = 2 * static_cast<long double>(positions);
  for (std::size_t k = 0; k < positions; ++k) {
    const long double at = static_cast<long double>(2 * k + 1) * static_cast<long double>(span);
    for (std::size_t s = 0; s < segments.size(); ++s) {
      const long double lo = two_p * static_cast<long double>(segments[s].start - origin);
      const long double hi = two_p * static_cast<long double>(segments[s].end - origin);
      if (lo <= at && at < hi) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

enum class EditOp { Delete, Insert, Substitute };

/// Every edit script turning a sequence of length n into one of length m.
inline void enumerate_scripts(std::size_t n, std::size_t m, std::vector<EditOp>& prefix,
                              std::vector<std::vector<EditOp>>& out) {
  if (n == 0 && m == 0) {
    out.push_back(prefix);
    return;
  }
  if (n > 0) {
    prefix.push_back(EditOp::Delete);
    enumerate_scripts(n - 1, m, prefix, out);
    prefix.pop_back();
  }
  if (m > 0) {
    prefix.push_back(EditOp::Insert);
    enumerate_scripts(n, m - 1, prefix, out);
    prefix.pop_back();
  }
  if (n > 0 && m > 0) {
    prefix.push_back(EditOp::Substitute);
    enumerate_scripts(n - 1, m - 1, prefix, out);
    prefix.pop_back();
  }
}

/// Minimum over all edit scripts of the summed operation costs. Each script
/// is replayed to confirm it really produces b.
inline double exhaustive_om(const std::vector<StateSymbol>& a, const std::vector<StateSymbol>& b,
                            const std::map<std::pair<StateSymbol, StateSymbol>, double>& sub,
                            double indel) {
  std::vector<std::vector<EditOp>> scripts;
  std::vector<EditOp> prefix;
  enumerate_scripts(a.size(), b.size(), prefix, scripts);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& script : scripts) {
    std::size_t i = 0;
    std::size_t j = 0;
    double cost = 0.0;
    std::vector<StateSymbol> produced;
    for (EditOp op : script) {
      switch (op) {
        case EditOp::Delete: cost += indel; ++i; break;
        case EditOp::Insert: cost += indel; produced.push_back(b[j++]); break;
        case EditOp::Substitute:
          cost += a[i] == b[j] ? 0.0 : sub.at({a[i], b[j]});
          produced.push_back(b[j]);
          ++i;
          ++j;
          break;
      }
    }
    if (produced != b) return std::numeric_limits<double>::quiet_NaN();
    best = std::min(best, cost);
  }
  return best;
}

/// Adjacent-pair tally keyed by (from, to).
inline std::map<std::pair<StateSymbol, StateSymbol>, std::size_t> pair_counts(
    const std::vector<std::vector<StateSymbol>>& seqs) {
  std::map<std::pair<StateSymbol, StateSymbol>, std::size_t> counts;
  for (const auto& s : seqs) {
    for (std::size_t p = 1; p < s.size(); ++p) ++counts[{s[p - 1], s[p]}];
  }
  return counts;
}

/// Fraction of item pairs on which two partitions agree.
template <typename A, typename B>
double rand_index(const std::vector<A>& truth, const std::vector<B>& found) {
  std::size_t agree = 0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    for (std::size_t j = i + 1; j < truth.size(); ++j) {
      ++pairs;
      if ((truth[i] == truth[j]) == (found[i] == found[j])) ++agree;
    }
  }
  return pairs == 0 ? 1.0 : static_cast<double>(agree) / static_cast<double>(pairs);
}

inline StateSymbol random_state(std::mt19937_64& rng) {
  return StateSymbol::from_code(std::uniform_int_distribution<std::size_t>(0, 16)(rng));
}

/// Random sequence with no two equal neighbours (DSS-like).
inline std::vector<StateSymbol> random_dss(std::mt19937_64& rng, std::size_t max_len,
                                           std::size_t min_len = 1) {
  const auto len = std::uniform_int_distribution<std::size_t>(min_len, max_len)(rng);
  std::vector<StateSymbol> out;
  while (out.size() < len) {
    const StateSymbol s = random_state(rng);
    if (out.empty() || out.back() != s) out.push_back(s);
  }
  return out;
}

/// Random contiguous trajectory over [origin, origin + span) with distinct neighbours.
inline std::vector<Segment> random_segments(std::mt19937_64& rng, std::int64_t origin,
                                            std::int64_t span, std::size_t max_segments) {
  const auto n = std::uniform_int_distribution<std::size_t>(
      1, std::min<std::size_t>(max_segments, static_cast<std::size_t>(span)))(rng);
  std::set<std::int64_t> cuts;
  while (cuts.size() + 1 < n) cuts.insert(std::uniform_int_distribution<std::int64_t>(1, span - 1)(rng));
  std::vector<std::int64_t> bounds{0};
  bounds.insert(bounds.end(), cuts.begin(), cuts.end());
  bounds.push_back(span);
  std::vector<Segment> segs;
  for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
    StateSymbol s = random_state(rng);
    while (!segs.empty() && segs.back().state == s) s = random_state(rng);
    segs.push_back(Segment{s, origin + bounds[k], origin + bounds[k + 1]});
  }
  return segs;
}

/// Random issue set on a one-minute grid; every issue is resolved inside the
/// window (the selection precondition), some are created before inception.
inline std::vector<IssueRecord> random_issue_set(std::mt19937_64& rng, const ReleaseWindow& window,
                                                 std::size_t max_issues, std::size_t max_types) {
  static const std::vector<std::string> kTypes{"Bug", "Improvement", "New Feature", "Task", "Wish"};
  std::vector<std::string> types = kTypes;
  std::shuffle(types.begin(), types.end(), rng);
  types.resize(std::uniform_int_distribution<std::size_t>(1, max_types)(rng));

  const std::int64_t minutes = (to_seconds(window.ending) - to_seconds(window.inception)) / 60;
  const auto n = std::uniform_int_distribution<std::size_t>(0, max_issues)(rng);
  std::vector<IssueRecord> issues;
  for (std::size_t k = 0; k < n; ++k) {
    const std::int64_t resolved = std::uniform_int_distribution<std::int64_t>(0, minutes)(rng);
    const std::int64_t created =
        std::uniform_int_distribution<std::int64_t>(-minutes / 4, resolved)(rng);
    IssueRecord i;
    i.id = "R-" + std::to_string(k + 1);
    i.type = IssueType::from_name(types[std::uniform_int_distribution<std::size_t>(0, types.size() - 1)(rng)]);
    i.created = window.inception + std::chrono::minutes{created};
    i.resolved = window.inception + std::chrono::minutes{resolved};
    i.resolution = "Fixed";
    issues.push_back(std::move(i));
  }
  return issues;
}

/// Random symmetric substitution costs in [0, 2] with zero diagonal.
inline SubstitutionCostMatrix random_scm(std::mt19937_64& rng, std::vector<StateSymbol> alphabet,
                                         double indel) {
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  SquareMatrix<double> costs(alphabet.size(), 0.0);
  std::uniform_real_distribution<double> cost(0.0, 2.0);
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    for (std::size_t j = i + 1; j < alphabet.size(); ++j) {
      costs(i, j) = costs(j, i) = cost(rng);
    }
  }
  return SubstitutionCostMatrix{std::move(alphabet), std::move(costs), indel};
}

}  // namespace rtk::oracle
