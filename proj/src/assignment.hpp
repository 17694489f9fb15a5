#pragma once

#include <cstddef>
#include <vector>

#include "wefhouse/rational.hpp"

namespace wefhouse::detail {

struct AssignmentSolution {
  Rational value;
  std::vector<std::size_t> column_of_row;
};

/// Maximum-weight assignment of every row to a distinct column (rows <= cols)
/// by the Hungarian method with exact potentials. O(rows^2 * cols).
AssignmentSolution max_weight_assignment(const std::vector<std::vector<Rational>>& value);

}  // namespace wefhouse::detail
