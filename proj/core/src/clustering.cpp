#include "rtk/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "rtk/errors.hpp"
#include "rtk/seqstats.hpp"

namespace rtk {
namespace {

bool nearly_equal(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

double lance_williams(Linkage linkage, double d_ki, double d_kj, double d_ij, double n_i,
                      double n_j, double n_k) {
  switch (linkage) {
    case Linkage::Single: return std::min(d_ki, d_kj);
    case Linkage::Complete: return std::max(d_ki, d_kj);
    case Linkage::Average: return (n_i * d_ki + n_j * d_kj) / (n_i + n_j);
    case Linkage::Ward:
      return ((n_i + n_k) * d_ki + (n_j + n_k) * d_kj - n_k * d_ij) / (n_i + n_j + n_k);
  }
  return 0.0;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
};

}  // namespace

std::string_view linkage_name(Linkage l) {
  switch (l) {
    case Linkage::Ward: return "ward";
    case Linkage::Single: return "single";
    case Linkage::Complete: return "complete";
    case Linkage::Average: return "average";
  }
  return "ward";
}

std::optional<Linkage> parse_linkage(std::string_view text) {
  for (Linkage l : {Linkage::Ward, Linkage::Single, Linkage::Complete, Linkage::Average}) {
    if (text == linkage_name(l)) return l;
  }
  return std::nullopt;
}

Dendrogram agglomerate(const DistanceMatrix& dm, Linkage linkage) {
  const std::size_t n = dm.size();
  Dendrogram tree;
  tree.release_ids = dm.release_ids;
  if (n < 2) return tree;

  const bool squared = linkage == Linkage::Ward;
  SquareMatrix<double> d(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = dm.distances(i, j);
      d(i, j) = squared ? v * v : v;
    }
  }

  // Slot i holds an active cluster; its node id and smallest member id.
  std::vector<bool> active(n, true);
  std::vector<std::size_t> node(n);
  std::vector<std::size_t> size(n, 1);
  std::vector<std::string> min_member = dm.release_ids;
  std::iota(node.begin(), node.end(), 0);

  auto pair_key = [&](std::size_t i, std::size_t j) {
    const std::string& a = min_member[i];
    const std::string& b = min_member[j];
    return a < b ? std::pair{a, b} : std::pair{b, a};
  };

  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t bi = n;
    std::size_t bj = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!active[j]) continue;
        const double v = d(i, j);
        if (bi == n || (v < best && !nearly_equal(v, best)) ||
            (nearly_equal(v, best) && pair_key(i, j) < pair_key(bi, bj))) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    }

    const double ni = static_cast<double>(size[bi]);
    const double nj = static_cast<double>(size[bj]);
    for (std::size_t k = 0; k < n; ++k) {
      if (!active[k] || k == bi || k == bj) continue;
      const double updated = lance_williams(linkage, d(k, bi), d(k, bj), d(bi, bj), ni, nj,
                                            static_cast<double>(size[k]));
      d(k, bi) = updated;
      d(bi, k) = updated;
    }

    Merge m;
    m.left = std::min(node[bi], node[bj]);
    m.right = std::max(node[bi], node[bj]);
    m.height = squared ? std::sqrt(std::max(0.0, best)) : best;
    m.size = size[bi] + size[bj];
    tree.merges.push_back(m);

    node[bi] = n + step;
    size[bi] = m.size;
    min_member[bi] = std::min(min_member[bi], min_member[bj]);
    active[bj] = false;
  }
  return tree;
}

std::vector<std::string> ClusterAssignment::members(int label) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) out.push_back(release_ids[i]);
  }
  return out;
}

ClusterAssignment cut(const Dendrogram& tree, const DistanceMatrix& dm, std::size_t k) {
  const std::size_t n = tree.release_ids.size();
  if (k < 1 || k > n) throw InvalidK(k, n);

  // Leaf representative of every node, so merges can be replayed on leaves.
  std::vector<std::size_t> leaf_of(n + tree.merges.size());
  std::iota(leaf_of.begin(), leaf_of.begin() + static_cast<std::ptrdiff_t>(n), 0);
  UnionFind uf(n);
  for (std::size_t m = 0; m < tree.merges.size(); ++m) {
    const Merge& merge = tree.merges[m];
    leaf_of[n + m] = leaf_of[merge.left];
    if (m < n - k) {
      uf.parent[uf.find(leaf_of[merge.right])] = uf.find(leaf_of[merge.left]);
    }
  }

  ClusterAssignment out;
  out.release_ids = tree.release_ids;
  out.labels.assign(n, 0);
  std::vector<int> label_of_root(n, 0);
  int next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int& label = label_of_root[uf.find(i)];
    if (label == 0) label = ++next;
    out.labels[i] = label;
  }
  out.sizes.assign(static_cast<std::size_t>(next), 0);
  for (int label : out.labels) ++out.sizes[static_cast<std::size_t>(label - 1)];

  out.medoids.assign(static_cast<std::size_t>(next), std::string{});
  std::vector<double> best(static_cast<std::size_t>(next), std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = static_cast<std::size_t>(out.labels[i] - 1);
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (out.labels[j] == out.labels[i]) total += dm.distances(i, j);
    }
    const bool better = total < best[c] && !nearly_equal(total, best[c]);
    const bool tie = nearly_equal(total, best[c]) && out.release_ids[i] < out.medoids[c];
    if (out.medoids[c].empty() || better || tie) {
      best[c] = total;
      out.medoids[c] = out.release_ids[i];
    }
  }
  return out;
}

ClusterAssignment hierarchical_cluster(const DistanceMatrix& dm, std::size_t k, Linkage linkage) {
  if (k < 1 || k > dm.size()) throw InvalidK(k, dm.size());
  return cut(agglomerate(dm, linkage), dm, k);
}

std::vector<PatternReport> extract_patterns(const ClusterAssignment& assignment,
                                            const std::map<std::string, DssSequence>& seqs,
                                            std::size_t min_size) {
  std::vector<PatternReport> patterns;
  for (std::size_t c = 0; c < assignment.cluster_count(); ++c) {
    if (assignment.sizes[c] < min_size) continue;
    PatternReport report;
    report.cluster = static_cast<int>(c + 1);
    report.members = assignment.members(report.cluster);
    report.medoid = assignment.medoids[c];

    std::vector<DssSequence> member_dss;
    for (const std::string& id : report.members) {
      const auto it = seqs.find(id);
      if (it == seqs.end()) throw std::invalid_argument("no DSS sequence for release '" + id + "'");
      member_dss.push_back(it->second);
      const auto& states = it->second.states;
      ++report.length_distribution[states.size()];
      if (!states.empty()) {
        ++report.first_states[states.front()];
        ++report.last_states[states.back()];
      }
    }
    if (const auto it = seqs.find(report.medoid); it != seqs.end()) {
      report.medoid_dss = it->second.states;
    }
    report.modal_dss = modal_trajectory(std::span<const DssSequence>{member_dss}).states();
    patterns.push_back(std::move(report));
  }
  std::stable_sort(patterns.begin(), patterns.end(),
                   [](const PatternReport& a, const PatternReport& b) {
                     return a.members.size() > b.members.size();
                   });
  for (std::size_t r = 0; r < patterns.size(); ++r) patterns[r].rank = r + 1;
  return patterns;
}

}  // namespace rtk
