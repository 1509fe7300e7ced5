#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rtk/distance.hpp"
#include "rtk/model.hpp"

namespace rtk {

enum class Linkage { Ward, Single, Complete, Average };

std::string_view linkage_name(Linkage l);
std::optional<Linkage> parse_linkage(std::string_view text);

/// One agglomeration step. Node ids below n are leaves (release indices);
/// the node created by merge m has id n + m.
struct Merge {
  std::size_t left = 0;
  std::size_t right = 0;
  double height = 0.0;
  std::size_t size = 0;
};

struct Dendrogram {
  std::vector<std::string> release_ids;
  std::vector<Merge> merges;  ///< n - 1 merges in agglomeration order
};

/// Agglomerative clustering with Lance-Williams updates (Ward on squared
/// dissimilarities). Equal-distance candidates are resolved by the smallest
/// pair of member ids.
Dendrogram agglomerate(const DistanceMatrix& dm, Linkage linkage = Linkage::Ward);

struct ClusterAssignment {
  std::vector<std::string> release_ids;  ///< input order
  std::vector<int> labels;               ///< 1..k, numbered by first appearance
  std::vector<std::size_t> sizes;        ///< sizes[label - 1]
  std::vector<std::string> medoids;      ///< medoids[label - 1]

  std::size_t cluster_count() const { return sizes.size(); }
  std::vector<std::string> members(int label) const;
};

/// Applies the first n - k merges. Throws InvalidK unless 1 <= k <= n.
ClusterAssignment cut(const Dendrogram& tree, const DistanceMatrix& dm, std::size_t k);

ClusterAssignment hierarchical_cluster(const DistanceMatrix& dm, std::size_t k,
                                       Linkage linkage = Linkage::Ward);

struct PatternReport {
  std::size_t rank = 0;  ///< 1 = largest
  int cluster = 0;
  std::vector<std::string> members;
  std::string medoid;
  std::vector<StateSymbol> medoid_dss;
  std::vector<StateSymbol> modal_dss;
  std::map<std::size_t, std::size_t> length_distribution;  ///< DSS length -> releases
  std::map<StateSymbol, std::size_t> first_states;
  std::map<StateSymbol, std::size_t> last_states;
};

inline constexpr std::size_t kDefaultMinPatternSize = 5;

/// Clusters with at least `min_size` members, largest first.
std::vector<PatternReport> extract_patterns(const ClusterAssignment& assignment,
                                            const std::map<std::string, DssSequence>& seqs,
                                            std::size_t min_size = kDefaultMinPatternSize);

}  // namespace rtk
