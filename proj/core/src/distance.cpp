#include "rtk/distance.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "rtk/errors.hpp"

namespace rtk {

SubstitutionCostMatrix::SubstitutionCostMatrix(std::vector<StateSymbol> alphabet,
                                               SquareMatrix<double> costs, double indel)
    : alphabet_(std::move(alphabet)), costs_(std::move(costs)), indel_(indel) {
  if (costs_.size() != alphabet_.size()) {
    throw std::invalid_argument("cost matrix does not match alphabet size");
  }
  if (!(indel_ >= 0.0) || !std::isfinite(indel_)) {
    throw std::invalid_argument("indel cost must be a non-negative number");
  }
  index_.fill(kAbsent);
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (index_[alphabet_[i].code()] != kAbsent) {
      throw std::invalid_argument("duplicate symbol in cost alphabet");
    }
    index_[alphabet_[i].code()] = i;
  }
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (costs_(i, i) != 0.0) throw std::invalid_argument("substitution cost diagonal must be 0");
    for (std::size_t j = 0; j < i; ++j) {
      if (costs_(i, j) != costs_(j, i) || costs_(i, j) < 0.0) {
        throw std::invalid_argument("substitution costs must be symmetric and non-negative");
      }
    }
  }
}

std::optional<std::size_t> SubstitutionCostMatrix::index_of(StateSymbol s) const {
  const std::size_t i = index_[s.code()];
  if (i == kAbsent) return std::nullopt;
  return i;
}

double SubstitutionCostMatrix::cost(StateSymbol a, StateSymbol b) const {
  const auto i = index_of(a);
  if (!i) throw UnknownSymbol(render_state(a));
  const auto j = index_of(b);
  if (!j) throw UnknownSymbol(render_state(b));
  return costs_(*i, *j);
}

SubstitutionCostMatrix scm_from_rates(const TransitionMatrix& tm, double indel,
                                      std::span<const StateSymbol> extra) {
  std::set<StateSymbol> symbols(tm.alphabet.begin(), tm.alphabet.end());
  symbols.insert(extra.begin(), extra.end());
  std::vector<StateSymbol> alphabet(symbols.begin(), symbols.end());

  const std::size_t n = alphabet.size();
  SquareMatrix<double> costs(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double c =
          std::max(0.0, 2.0 - tm.rate(alphabet[j], alphabet[i]) - tm.rate(alphabet[i], alphabet[j]));
      costs(i, j) = c;
      costs(j, i) = c;
    }
  }
  return SubstitutionCostMatrix{std::move(alphabet), std::move(costs), indel};
}

bool satisfies_triangle_inequality(const SubstitutionCostMatrix& scm, double tol) {
  const auto& c = scm.costs();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (c(i, j) > 2.0 * scm.indel() + tol) return false;
      for (std::size_t k = 0; k < n; ++k) {
        if (c(i, j) > c(i, k) + c(k, j) + tol) return false;
      }
    }
  }
  return true;
}

double om_distance(std::span<const StateSymbol> a, std::span<const StateSymbol> b,
                   const SubstitutionCostMatrix& scm) {
  auto indices = [&](std::span<const StateSymbol> seq) {
    std::vector<std::size_t> out;
    out.reserve(seq.size());
    for (StateSymbol s : seq) {
      const auto i = scm.index_of(s);
      if (!i) throw UnknownSymbol(render_state(s));
      out.push_back(*i);
    }
    return out;
  };
  const auto ia = indices(a);
  const auto ib = indices(b);
  const double indel = scm.indel();
  const auto& costs = scm.costs();

  // Two rolling rows of the (|a|+1) x (|b|+1) table.
  std::vector<double> prev(ib.size() + 1);
  std::vector<double> curr(ib.size() + 1);
  for (std::size_t j = 0; j <= ib.size(); ++j) prev[j] = static_cast<double>(j) * indel;
  for (std::size_t i = 1; i <= ia.size(); ++i) {
    curr[0] = static_cast<double>(i) * indel;
    for (std::size_t j = 1; j <= ib.size(); ++j) {
      curr[j] = std::min({prev[j] + indel, curr[j - 1] + indel,
                          prev[j - 1] + costs(ia[i - 1], ib[j - 1])});
    }
    std::swap(prev, curr);
  }
  return prev[ib.size()];
}

DistanceMatrix distance_matrix(std::span<const LabeledSequence> seqs,
                               const SubstitutionCostMatrix& scm) {
  std::set<std::string> ids;
  for (const LabeledSequence& s : seqs) {
    if (!ids.insert(s.id).second) throw std::invalid_argument("duplicate sequence id '" + s.id + "'");
  }
  return distance_matrix(seqs, [&scm](std::span<const StateSymbol> a, std::span<const StateSymbol> b) {
    return om_distance(a, b, scm);
  });
}

}  // namespace rtk
