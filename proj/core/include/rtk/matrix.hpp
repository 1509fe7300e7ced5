#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace rtk {

/// Dense row-major n x n matrix.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, T fill = T{}) : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < n_ && j < n_);
    return data_[i * n_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < n_ && j < n_);
    return data_[i * n_ + j];
  }

  T row_sum(std::size_t i) const {
    T total{};
    for (std::size_t j = 0; j < n_; ++j) total += (*this)(i, j);
    return total;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

}  // namespace rtk
