#include "assignment.hpp"

#include <optional>
#include <stdexcept>

namespace wefhouse::detail {

AssignmentSolution max_weight_assignment(const std::vector<std::vector<Rational>>& value) {
  const std::size_t rows = value.size();
  AssignmentSolution out;
  if (rows == 0) return out;
  const std::size_t cols = value.front().size();
  if (cols < rows) throw std::invalid_argument("assignment needs at least as many columns as rows");

  // Minimise -value; index 0 is the usual sentinel row/column.
  auto cost = [&](std::size_t i, std::size_t j) { return -value[i - 1][j - 1]; };
  std::vector<Rational> u(rows + 1), v(cols + 1);
  std::vector<std::size_t> owner(cols + 1, 0), way(cols + 1, 0);

  for (std::size_t i = 1; i <= rows; ++i) {
    owner[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<Rational>> min_slack(cols + 1);
    std::vector<char> used(cols + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = owner[j0];
      std::optional<Rational> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= cols; ++j) {
        if (used[j]) continue;
        Rational slack = cost(i0, j) - u[i0] - v[j];
        if (!min_slack[j] || slack < *min_slack[j]) {
          min_slack[j] = std::move(slack);
          way[j] = j0;
        }
        if (!delta || *min_slack[j] < *delta) {
          delta = *min_slack[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= cols; ++j) {
        if (used[j]) {
          u[owner[j]] += *delta;
          v[j] -= *delta;
        } else if (min_slack[j]) {
          *min_slack[j] -= *delta;
        }
      }
      j0 = j1;
    } while (owner[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      owner[j0] = owner[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  out.column_of_row.assign(rows, 0);
  for (std::size_t j = 1; j <= cols; ++j) {
    if (owner[j] != 0) {
      out.column_of_row[owner[j] - 1] = j - 1;
      out.value += value[owner[j] - 1][j - 1];
    }
  }
  return out;
}

}  // namespace wefhouse::detail
