#include <benchmark/benchmark.h>

#include <random>

#include "rtk/clustering.hpp"
#include "rtk/distance.hpp"
#include "rtk/synthetic.hpp"
#include "rtk/trajectory.hpp"

namespace {

struct Corpus {
  std::vector<rtk::LabeledSequence> normalized;
  rtk::SubstitutionCostMatrix scm;
};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus out;
    const rtk::SyntheticCorpus syn = rtk::generate_corpus();
    std::vector<rtk::DssSequence> dss;
    for (const rtk::ReleaseWindow& w : syn.manifest.releases) {
      const auto t = rtk::build_issue_trajectory(rtk::select_resolved_issues(syn.issues, w), w);
      out.normalized.push_back({w.release_id, rtk::normalize(t)});
      dss.push_back(rtk::to_dss(t));
    }
    out.scm = rtk::scm_from_rates(rtk::transition_rates(dss));
    return out;
  }();
  return c;
}

void BM_OmDistance(benchmark::State& state) {
  const Corpus& c = corpus();
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& a = c.normalized[i % c.normalized.size()].states;
    const auto& b = c.normalized[(i + 7) % c.normalized.size()].states;
    benchmark::DoNotOptimize(rtk::om_distance(a, b, c.scm));
    ++i;
  }
}
BENCHMARK(BM_OmDistance);

void BM_DistanceMatrix(benchmark::State& state) {
  const Corpus& c = corpus();
  const std::span<const rtk::LabeledSequence> seqs(c.normalized.data(),
                                                   static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rtk::distance_matrix(seqs, c.scm));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DistanceMatrix)->Arg(21)->Arg(42)->Arg(84)->Unit(benchmark::kMillisecond);

void BM_WardClustering(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 50.0);
  rtk::DistanceMatrix dm;
  dm.distances = rtk::SquareMatrix<double>(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    dm.release_ids.push_back("r" + std::to_string(i));
    for (std::size_t j = i + 1; j < n; ++j) dm.distances(i, j) = dm.distances(j, i) = u(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(rtk::hierarchical_cluster(dm, 6));
}
BENCHMARK(BM_WardClustering)->Arg(84)->Arg(250)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
