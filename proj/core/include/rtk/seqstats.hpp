#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rtk/matrix.hpp"
#include "rtk/model.hpp"

namespace rtk {

struct TrajectorySummary {
  std::vector<StateSymbol> distinct_states;  ///< canonical order
  std::size_t transitions = 0;
  std::map<StateSymbol, std::int64_t> durations;  ///< seconds or commits
};

TrajectorySummary summarize(const Trajectory& t);

/// Empirical switching probabilities between the observed states.
struct TransitionMatrix {
  std::vector<StateSymbol> alphabet;  ///< observed symbols, canonical order
  SquareMatrix<double> rates;         ///< rates(i, j) = p(alphabet[j] | alphabet[i])
  SquareMatrix<std::size_t> support;  ///< raw adjacent-pair counts

  std::optional<std::size_t> index_of(StateSymbol s) const;
  /// p(to | from); 0 when either symbol is unobserved.
  double rate(StateSymbol from, StateSymbol to) const;
};

/// Counts adjacent pairs across all sequences and normalises each row.
/// Throws EmptyCorpus.
TransitionMatrix transition_rates(std::span<const DssSequence> seqs);
TransitionMatrix transition_rates(std::span<const std::vector<StateSymbol>> seqs);

struct ModalPosition {
  StateSymbol state;
  double frequency = 0.0;       ///< support / denominator
  std::size_t support = 0;      ///< sequences holding `state` here
  std::size_t denominator = 0;  ///< sequences long enough to reach this position
};

struct ModalTrajectory {
  std::vector<ModalPosition> positions;
  std::vector<StateSymbol> states() const;
};

/// Most frequent state per position. Sequences may be ragged (DSS); ties go
/// to the canonically smaller state. Throws EmptyCorpus.
ModalTrajectory modal_trajectory(std::span<const std::vector<StateSymbol>> seqs);
ModalTrajectory modal_trajectory(std::span<const DssSequence> seqs);

struct DssFrequency {
  std::vector<StateSymbol> pattern;
  std::size_t count = 0;
  double cumulative_ratio = 0.0;
};

/// Exact-match table of DSS patterns, by descending count (ties in
/// lexicographic canonical order).
std::vector<DssFrequency> dss_frequency(std::span<const DssSequence> seqs);

}  // namespace rtk
