#include "ospra/hungarian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "ospra/types.hpp"

namespace ospra {

CostMatrix::CostMatrix(std::size_t n, std::vector<double> data) : n_(n), cost_(std::move(data)) {
  if (cost_.size() != n * n) throw ValidationError("cost matrix must be square");
}

AssignmentResult hungarian(const CostMatrix& cost) {
  const std::size_t n = cost.size();
  if (n == 0) throw ValidationError("cost matrix must be nonempty");
  for (std::size_t i = 0; i < n; ++i) {
    for (double c : cost.row(i)) {
      if (!std::isfinite(c)) throw ValidationError("cost matrix entries must be finite");
    }
  }

  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based internally; column 0 is a virtual column holding the row being
  // inserted. row_of_col[j] == 0 means column j is free.
  std::vector<double> row_pot(n + 1, 0.0), col_pot(n + 1, 0.0);
  std::vector<std::size_t> row_of_col(n + 1, 0), prev_col(n + 1, 0);
  std::vector<double> min_slack(n + 1);
  std::vector<char> visited(n + 1);

  for (std::size_t r = 1; r <= n; ++r) {
    row_of_col[0] = r;
    std::size_t col = 0;
    std::fill(min_slack.begin(), min_slack.end(), kInf);
    std::fill(visited.begin(), visited.end(), 0);
    do {
      visited[col] = 1;
      const std::size_t row = row_of_col[col];
      double delta = kInf;
      std::size_t next_col = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (visited[j]) continue;
        const double slack = cost(row - 1, j - 1) - row_pot[row] - col_pot[j];
        if (slack < min_slack[j]) {
          min_slack[j] = slack;
          prev_col[j] = col;
        }
        // strict < keeps the lowest-index column on ties
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          next_col = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (visited[j]) {
          row_pot[row_of_col[j]] += delta;
          col_pot[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      col = next_col;
    } while (row_of_col[col] != 0);

    // augment along the alternating path back to the virtual column
    do {
      const std::size_t p = prev_col[col];
      row_of_col[col] = row_of_col[p];
      col = p;
    } while (col != 0);
  }

  AssignmentResult result;
  result.column_of_row.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) result.column_of_row[row_of_col[j] - 1] = j - 1;
  for (std::size_t i = 0; i < n; ++i) result.total_cost += cost(i, result.column_of_row[i]);
  return result;
}

}  // namespace ospra
