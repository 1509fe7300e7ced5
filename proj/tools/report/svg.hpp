#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rtk/clustering.hpp"
#include "rtk/seqstats.hpp"
#include "rtk/state.hpp"

namespace rtk::report {

/// Fixed fill colour (#rrggbb) for every symbol of the alphabet.
std::string_view state_color(StateSymbol s);

struct SequenceRow {
  std::string label;
  std::vector<StateSymbol> states;
};

/// One horizontal colour-banded bar per row; each state gets equal width.
std::string sequence_index_svg(std::string_view title, std::span<const SequenceRow> rows);

std::string transition_heatmap_svg(std::string_view title, const TransitionMatrix& tm);

/// Modal state per position, bar height proportional to its frequency.
std::string modal_svg(std::string_view title, const ModalTrajectory& modal);

/// DSS patterns as bars with a cumulative-frequency curve.
std::string dss_frequency_svg(std::string_view title, std::span<const DssFrequency> table,
                              std::size_t max_rows = 30);

struct PatternGroup {
  std::string label;
  std::vector<SequenceRow> rows;
};

std::string pattern_groups_svg(std::string_view title, std::span<const PatternGroup> groups);

}  // namespace rtk::report
