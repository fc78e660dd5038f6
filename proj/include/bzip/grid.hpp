#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bzip {

// Dense row-major table indexed by a pair of non-negative counts.
class Grid {
 public:
  Grid() = default;
  Grid(std::int64_t rows, std::int64_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), fill) {}

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }

  double& operator()(std::int64_t i, std::int64_t j) { return data_[index(i, j)]; }
  double operator()(std::int64_t i, std::int64_t j) const { return data_[index(i, j)]; }

  bool contains(std::int64_t i, std::int64_t j) const {
    return i >= 0 && j >= 0 && i < rows_ && j < cols_;
  }

 private:
  std::size_t index(std::int64_t i, std::int64_t j) const {
    return static_cast<std::size_t>(i * cols_ + j);
  }

  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace bzip
