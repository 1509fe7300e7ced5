#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rtk/clustering.hpp"
#include "rtk/distance.hpp"
#include "rtk/ingestion.hpp"
#include "rtk/model.hpp"
#include "rtk/seqstats.hpp"

namespace rtk {

// All writers produce deterministic text: fixed key order, trailing newline.

std::string trajectory_to_json(const Trajectory& t);
/// Throws Error on schema violations.
Trajectory trajectory_from_json(std::string_view text);

std::string manifest_to_json(const ReleaseManifest& manifest);

std::string issues_to_jsonl(std::span<const IssueRecord> issues);
std::string commits_to_jsonl(std::span<const CommitRecord> commits);

std::string transition_matrix_to_json(const TransitionMatrix& tm);
std::string modal_trajectory_to_json(const ModalTrajectory& modal, std::string_view mode);
std::string dss_frequency_to_json(std::span<const DssFrequency> table);
std::string scm_to_json(const SubstitutionCostMatrix& scm);

/// Header row and column of release ids, 6 decimal places.
std::string distance_matrix_to_csv(const DistanceMatrix& dm);
std::string distance_matrix_to_json(const DistanceMatrix& dm);

/// "release_id,cluster" rows in input order.
std::string clusters_to_csv(const ClusterAssignment& assignment);
std::string patterns_to_json(std::span<const PatternReport> patterns, std::size_t min_size,
                             std::size_t total_releases);

std::string join_states(std::span<const StateSymbol> states, std::string_view sep = "-");

}  // namespace rtk
