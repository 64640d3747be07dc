#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "catcol/graph.hpp"

namespace catcol {

// Proper-coloring restricted to vertices that each carry exactly two
// admissible colors.  Vertices are 0..lists.size()-1; edges demand distinct
// colors wherever the two lists overlap.  Returns one color per vertex or
// nullopt when unsatisfiable.  Implication graph + SCC underneath; the
// output is deterministic for a fixed input.
//
// Throws std::invalid_argument if some list does not have exactly two colors
// or an edge endpoint is out of range.
std::optional<std::vector<int>> two_list_color(const std::vector<ColorSet>& lists,
                                               const std::vector<std::pair<int, int>>& edges);

}  // namespace catcol
