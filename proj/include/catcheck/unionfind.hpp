#pragma once

#include <utility>
#include <vector>

namespace catcheck {

struct QuotientResult {
  int classes = 0;
  std::vector<int> projection;  // surjective, classes numbered by ascending
                                // minimal representative
};

// Quotient of {0..size-1} by the equivalence closure of the given pairs.
// Throws std::out_of_range on an index outside [0, size).
QuotientResult union_find_quotient(int size,
                                   const std::vector<std::pair<int, int>>& pairs);

}  // namespace catcheck
