#pragma once

#include <optional>
#include <vector>

namespace catcol {

// Finds a permutation of {0..m-1} under which every given set occupies a
// consecutive block, or nullopt if no such permutation exists.  Sets of size
// <= 1 and size m impose nothing and are skipped.  Deterministic for a fixed
// input sequence.  Quadratic-time PQ-tree underneath.
std::optional<std::vector<int>> consecutive_ones_order(int m,
                                                       const std::vector<std::vector<int>>& sets);

}  // namespace catcol
