#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rtk/ingestion.hpp"
#include "rtk/model.hpp"

namespace rtk {

/// A release shape: global states with their share of the release duration.
struct FamilyTemplate {
  std::string name;
  std::vector<std::pair<StateSymbol, double>> phases;
};

/// Six families modelled on commonly reported release shapes.
const std::vector<FamilyTemplate>& planted_families();

struct SyntheticOptions {
  std::vector<std::size_t> family_sizes{20, 17, 14, 13, 10, 10};
  std::uint64_t seed = 20150101;
  double jitter = 0.25;           ///< relative perturbation of each phase share
  double letter_swap_rate = 0.1;  ///< chance to swap B <-> I in an atomic phase
  double tagging_rate = 0.55;     ///< chance a commit mentions an open issue
};

/// Issue export, commit log and manifest for a planted corpus.
/// Releases of different families are interleaved along one linear history.
struct SyntheticCorpus {
  std::vector<IssueRecord> issues;
  std::vector<CommitRecord> commits;
  ReleaseManifest manifest;
  std::vector<std::size_t> family_of_release;  ///< parallel to manifest.releases
};

SyntheticCorpus generate_corpus(const SyntheticOptions& options = {});

}  // namespace rtk
