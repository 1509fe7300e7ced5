#include "rtk/seqstats.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "rtk/errors.hpp"

namespace rtk {

TrajectorySummary summarize(const Trajectory& t) {
  TrajectorySummary summary;
  std::set<StateSymbol> distinct;
  for (const Segment& s : t.segments) {
    distinct.insert(s.state);
    summary.durations[s.state] += s.length();
  }
  summary.distinct_states.assign(distinct.begin(), distinct.end());
  summary.transitions = t.segments.empty() ? 0 : t.segments.size() - 1;
  return summary;
}

std::optional<std::size_t> TransitionMatrix::index_of(StateSymbol s) const {
  const auto it = std::lower_bound(alphabet.begin(), alphabet.end(), s);
  if (it == alphabet.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - alphabet.begin());
}

double TransitionMatrix::rate(StateSymbol from, StateSymbol to) const {
  const auto i = index_of(from);
  const auto j = index_of(to);
  if (!i || !j) return 0.0;
  return rates(*i, *j);
}

TransitionMatrix transition_rates(std::span<const std::vector<StateSymbol>> seqs) {
  if (seqs.empty()) throw EmptyCorpus();
  std::set<StateSymbol> observed;
  for (const auto& seq : seqs) observed.insert(seq.begin(), seq.end());

  TransitionMatrix tm;
  tm.alphabet.assign(observed.begin(), observed.end());
  const std::size_t n = tm.alphabet.size();
  tm.support = SquareMatrix<std::size_t>(n, 0);
  tm.rates = SquareMatrix<double>(n, 0.0);

  std::array<std::size_t, StateSymbol::kAlphabetSize> index{};
  for (std::size_t i = 0; i < n; ++i) index[tm.alphabet[i].code()] = i;

  for (const auto& seq : seqs) {
    for (std::size_t p = 0; p + 1 < seq.size(); ++p) {
      ++tm.support(index[seq[p].code()], index[seq[p + 1].code()]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t total = tm.support.row_sum(i);
    if (total == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      tm.rates(i, j) = static_cast<double>(tm.support(i, j)) / static_cast<double>(total);
    }
  }
  return tm;
}

TransitionMatrix transition_rates(std::span<const DssSequence> seqs) {
  std::vector<std::vector<StateSymbol>> plain;
  plain.reserve(seqs.size());
  for (const DssSequence& s : seqs) plain.push_back(s.states);
  return transition_rates(std::span<const std::vector<StateSymbol>>{plain});
}

std::vector<StateSymbol> ModalTrajectory::states() const {
  std::vector<StateSymbol> out;
  out.reserve(positions.size());
  for (const ModalPosition& p : positions) out.push_back(p.state);
  return out;
}

ModalTrajectory modal_trajectory(std::span<const std::vector<StateSymbol>> seqs) {
  if (seqs.empty()) throw EmptyCorpus();
  std::size_t longest = 0;
  for (const auto& seq : seqs) longest = std::max(longest, seq.size());

  ModalTrajectory modal;
  modal.positions.reserve(longest);
  for (std::size_t p = 0; p < longest; ++p) {
    std::array<std::size_t, StateSymbol::kAlphabetSize> counts{};
    std::size_t denominator = 0;
    for (const auto& seq : seqs) {
      if (p >= seq.size()) continue;
      ++counts[seq[p].code()];
      ++denominator;
    }
    ModalPosition best;
    // full_alphabet() is in canonical order, so strict > keeps the smaller state on ties.
    for (StateSymbol s : full_alphabet()) {
      if (counts[s.code()] > best.support) {
        best.state = s;
        best.support = counts[s.code()];
      }
    }
    best.denominator = denominator;
    best.frequency = static_cast<double>(best.support) / static_cast<double>(denominator);
    modal.positions.push_back(best);
  }
  return modal;
}

ModalTrajectory modal_trajectory(std::span<const DssSequence> seqs) {
  std::vector<std::vector<StateSymbol>> plain;
  plain.reserve(seqs.size());
  for (const DssSequence& s : seqs) plain.push_back(s.states);
  return modal_trajectory(std::span<const std::vector<StateSymbol>>{plain});
}

std::vector<DssFrequency> dss_frequency(std::span<const DssSequence> seqs) {
  std::map<std::vector<StateSymbol>, std::size_t> counts;
  for (const DssSequence& s : seqs) ++counts[s.states];

  std::vector<DssFrequency> table;
  table.reserve(counts.size());
  for (const auto& [pattern, count] : counts) table.push_back(DssFrequency{pattern, count, 0.0});
  std::stable_sort(table.begin(), table.end(), [](const DssFrequency& a, const DssFrequency& b) {
    return a.count > b.count;
  });
  std::size_t running = 0;
  for (DssFrequency& row : table) {
    running += row.count;
    row.cumulative_ratio = static_cast<double>(running) / static_cast<double>(seqs.size());
  }
  return table;
}

}  // namespace rtk
