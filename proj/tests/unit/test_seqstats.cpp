#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rtk/errors.hpp"
#include "rtk/seqstats.hpp"
#include "rtk/trajectory.hpp"

using namespace rtk;

namespace {

StateSymbol S(const char* text) { return *parse_state(text); }

std::vector<StateSymbol> seq(std::initializer_list<const char*> states) {
  std::vector<StateSymbol> out;
  for (const char* s : states) out.push_back(S(s));
  return out;
}

std::vector<DssSequence> hand_corpus() {
  return {{"r1", seq({"B", "I", "F"})},
          {"r2", seq({"B", "I"})},
          {"r3", seq({"B", "F"})},
          {"r4", seq({"I", "B"})},
          {"r5", seq({"F", "B", "I"})}};
}

}  // namespace

TEST(TransitionRates, HandCountedCorpus) {
  const TransitionMatrix tm = transition_rates(std::span<const DssSequence>(hand_corpus()));
  EXPECT_EQ(tm.alphabet, seq({"B", "I", "F"}));
  EXPECT_DOUBLE_EQ(tm.rate(S("B"), S("I")), 0.75);
  EXPECT_DOUBLE_EQ(tm.rate(S("B"), S("F")), 0.25);
  EXPECT_DOUBLE_EQ(tm.rate(S("I"), S("B")), 0.5);
  EXPECT_DOUBLE_EQ(tm.rate(S("I"), S("F")), 0.5);
  EXPECT_DOUBLE_EQ(tm.rate(S("F"), S("B")), 1.0);
  EXPECT_DOUBLE_EQ(tm.rate(S("F"), S("I")), 0.0);
  EXPECT_EQ(tm.support(*tm.index_of(S("B")), *tm.index_of(S("I"))), 3u);
  EXPECT_DOUBLE_EQ(tm.rate(S("T"), S("B")), 0.0);
}

TEST(TransitionRates, AgreesWithPairTally) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<StateSymbol>> seqs;
    for (int k = 0; k < 30; ++k) seqs.push_back(oracle::random_dss(rng, 12));
    const TransitionMatrix tm = transition_rates(std::span<const std::vector<StateSymbol>>(seqs));
    const auto counts = oracle::pair_counts(seqs);
    std::map<StateSymbol, std::size_t> row_totals;
    for (const auto& [pair, n] : counts) row_totals[pair.first] += n;
    for (StateSymbol a : tm.alphabet) {
      for (StateSymbol b : tm.alphabet) {
        const auto it = counts.find({a, b});
        const std::size_t n = it == counts.end() ? 0 : it->second;
        EXPECT_EQ(tm.support(*tm.index_of(a), *tm.index_of(b)), n);
        const double expected =
            row_totals[a] == 0 ? 0.0 : static_cast<double>(n) / static_cast<double>(row_totals[a]);
        EXPECT_NEAR(tm.rate(a, b), expected, 1e-12);
      }
      const double sum = tm.rates.row_sum(*tm.index_of(a));
      if (row_totals[a] > 0) EXPECT_NEAR(sum, 1.0, 1e-9);
      else EXPECT_EQ(sum, 0.0);
    }
  }
}

TEST(TransitionRates, EmptyCorpus) {
  EXPECT_THROW(transition_rates(std::span<const DssSequence>()), EmptyCorpus);
}

TEST(ModalTrajectory, RaggedDenominators) {
  const auto corpus = hand_corpus();
  const ModalTrajectory m = modal_trajectory(std::span<const DssSequence>(corpus));
  ASSERT_EQ(m.positions.size(), 3u);
  EXPECT_EQ(m.positions[0].state, S("B"));
  EXPECT_EQ(m.positions[0].support, 3u);
  EXPECT_EQ(m.positions[0].denominator, 5u);
  EXPECT_DOUBLE_EQ(m.positions[0].frequency, 0.6);
  // position 2: B and I tie on support 2; canonical order puts B first
  EXPECT_EQ(m.positions[1].state, S("B"));
  EXPECT_EQ(m.positions[1].support, 2u);
  // position 3: F and I tie on support 1; canonical order puts I first
  EXPECT_EQ(m.positions[2].state, S("I"));
  EXPECT_EQ(m.positions[2].denominator, 2u);
  EXPECT_EQ(m.states(), seq({"B", "B", "I"}));
}

TEST(DssFrequency, CountsAndCumulativeRatio) {
  std::vector<DssSequence> corpus{{"a", seq({"B", "I"})}, {"b", seq({"F"})},
                                  {"c", seq({"B", "I"})}, {"d", seq({"B"})}};
  const auto table = dss_frequency(corpus);
  ASSERT_EQ(table.size(), 3u);
  EXPECT_EQ(table[0].pattern, seq({"B", "I"}));
  EXPECT_EQ(table[0].count, 2u);
  EXPECT_DOUBLE_EQ(table[0].cumulative_ratio, 0.5);
  EXPECT_EQ(table[1].pattern, seq({"B"}));
  EXPECT_EQ(table[2].pattern, seq({"F"}));
  EXPECT_DOUBLE_EQ(table[2].cumulative_ratio, 1.0);
}

TEST(Summarize, DistinctStatesAndDurations) {
  Trajectory t;
  t.window = ReleaseWindow{"r", from_seconds(0), from_seconds(30)};
  t.segments = {{S("I"), 0, 10}, {S("B"), 10, 15}, {S("I"), 15, 30}};
  const TrajectorySummary s = summarize(t);
  EXPECT_EQ(s.distinct_states, seq({"B", "I"}));
  EXPECT_EQ(s.transitions, 2u);
  EXPECT_EQ(s.durations.at(S("I")), 25);
  EXPECT_EQ(s.durations.at(S("B")), 5);
}
