#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ospra {

/// Dense square cost matrix, row-major. Entries may be negative.
class CostMatrix {
 public:
  CostMatrix() = default;
  explicit CostMatrix(std::size_t n, double fill = 0.0) : n_(n), cost_(n * n, fill) {}
  /// Builds from row-major data; throws ValidationError unless data.size() == n*n.
  CostMatrix(std::size_t n, std::vector<double> data);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t row, std::size_t col) const { return cost_[row * n_ + col]; }
  double& operator()(std::size_t row, std::size_t col) { return cost_[row * n_ + col]; }
  std::span<const double> row(std::size_t r) const { return {cost_.data() + r * n_, n_}; }

 private:
  std::size_t n_ = 0;
  std::vector<double> cost_;
};

struct AssignmentResult {
  std::vector<std::size_t> column_of_row;  // a permutation of 0..n-1
  double total_cost = 0.0;                 // summed in row order
};

/// Minimum-cost perfect matching (Kuhn-Munkres with row/column potentials),
/// O(n³). Throws ValidationError on an empty matrix or non-finite entries.
AssignmentResult hungarian(const CostMatrix& cost);

}  // namespace ospra
