#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rtk/matrix.hpp"
#include "rtk/seqstats.hpp"
#include "rtk/state.hpp"

namespace rtk {

inline constexpr double kDefaultIndel = 1.0;

/// Symmetric substitution costs over an alphabet plus a constant indel cost.
class SubstitutionCostMatrix {
 public:
  SubstitutionCostMatrix() = default;
  /// costs must be square over `alphabet`; symmetry and zero diagonal are checked.
  SubstitutionCostMatrix(std::vector<StateSymbol> alphabet, SquareMatrix<double> costs,
                         double indel);

  const std::vector<StateSymbol>& alphabet() const { return alphabet_; }
  const SquareMatrix<double>& costs() const { return costs_; }
  double indel() const { return indel_; }

  std::optional<std::size_t> index_of(StateSymbol s) const;
  /// Throws UnknownSymbol.
  double cost(StateSymbol a, StateSymbol b) const;

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  std::vector<StateSymbol> alphabet_;
  SquareMatrix<double> costs_;
  double indel_ = kDefaultIndel;
  std::array<std::size_t, StateSymbol::kAlphabetSize> index_{};
};

/// cost(i, j) = 2 - p(i | j) - p(j | i), clamped at 0, zero diagonal. Symbols
/// in `extra` that the rate matrix never observed cost 2 against everything.
SubstitutionCostMatrix scm_from_rates(const TransitionMatrix& tm, double indel = kDefaultIndel,
                                      std::span<const StateSymbol> extra = {});

/// True when every substitution cost obeys the triangle inequality and is at
/// most two indels, which makes OM a metric.
bool satisfies_triangle_inequality(const SubstitutionCostMatrix& scm, double tol = 1e-12);

/// Optimal Matching: minimal total insertion/deletion/substitution cost.
double om_distance(std::span<const StateSymbol> a, std::span<const StateSymbol> b,
                   const SubstitutionCostMatrix& scm);

struct LabeledSequence {
  std::string id;
  std::vector<StateSymbol> states;
};

struct DistanceMatrix {
  std::vector<std::string> release_ids;
  SquareMatrix<double> distances;

  std::size_t size() const { return release_ids.size(); }
};

/// Pairwise distances from `dist(a, b)` over the upper triangle, mirrored.
template <typename DistanceFn>
DistanceMatrix distance_matrix(std::span<const LabeledSequence> seqs, DistanceFn&& dist) {
  DistanceMatrix dm;
  dm.distances = SquareMatrix<double>(seqs.size(), 0.0);
  dm.release_ids.reserve(seqs.size());
  for (const LabeledSequence& s : seqs) dm.release_ids.push_back(s.id);
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    for (std::size_t j = i + 1; j < seqs.size(); ++j) {
      const double d = dist(seqs[i].states, seqs[j].states);
      dm.distances(i, j) = d;
      dm.distances(j, i) = d;
    }
  }
  return dm;
}

DistanceMatrix distance_matrix(std::span<const LabeledSequence> seqs,
                               const SubstitutionCostMatrix& scm);

}  // namespace rtk
